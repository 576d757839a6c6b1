#pragma once

// Control service: one virtual machine per process, stepped on a wall-clock
// throttled tick and steered over WebSocket.
//
//   ws   /machine      client -> server: control messages (see machine.hpp)
//                      server -> client: sample / ack / error objects
//   GET  /state        current MachineState as JSON
//   GET  /export.svg   pen-down trace rendered to SVG
//
// Knob changes take effect instantly between two ticks; the simulated
// device has no motor transients.

#include <cstdint>
#include <memory>
#include <string>

#include "trochoid/kinematics.hpp"
#include "trochoid/machine.hpp"

namespace trochoid {

inline constexpr unsigned short kDefaultPort = 7420;

struct ServerOptions {
  std::string address = "127.0.0.1";
  unsigned short port = kDefaultPort;  // 0 picks a free port
  Rig rig;
  double tick_rate = kDefaultTickRate;
  std::size_t max_queued_frames = 2048;  // per subscriber; extra samples are dropped
};

class ControlServer {
 public:
  explicit ControlServer(ServerOptions options);
  ~ControlServer();

  ControlServer(const ControlServer&) = delete;
  ControlServer& operator=(const ControlServer&) = delete;

  // Binds and serves on a background thread.
  void start();
  void stop();

  // Binds and serves on the calling thread until SIGINT/SIGTERM.
  void run();

  // Bound port, valid after start() or once run() is listening.
  unsigned short port() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace trochoid
