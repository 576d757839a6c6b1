#include "trochoid/server.hpp"

#include <atomic>
#include <chrono>
#include <deque>
#include <thread>
#include <unordered_set>

#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/http.hpp>
#include <boost/beast/websocket.hpp>
#include <spdlog/spdlog.h>

#include "trochoid/render.hpp"

namespace trochoid {

namespace {

namespace beast = boost::beast;
namespace http = beast::http;
namespace websocket = beast::websocket;
namespace net = boost::asio;
using tcp = net::ip::tcp;

class WsSession;

// Owns the machine and the subscriber set. Everything runs on one io thread,
// so ticks and messages are naturally serialized.
class Hub {
 public:
  Hub(net::io_context& ioc, const ServerOptions& options)
      : machine_(options.rig, options.tick_rate),
        timer_(ioc),
        period_(std::chrono::duration_cast<std::chrono::steady_clock::duration>(
            std::chrono::duration<double>(1.0 / options.tick_rate))),
        max_queued_(options.max_queued_frames) {}

  void start_ticking() {
    next_tick_ = std::chrono::steady_clock::now() + period_;
    schedule();
  }

  void stop_ticking() { timer_.cancel(); }

  void join(const std::shared_ptr<WsSession>& session) { sessions_.insert(session); }
  void leave(const std::shared_ptr<WsSession>& session) { sessions_.erase(session); }

  void on_message(const std::shared_ptr<WsSession>& from, const std::string& text);

  std::string state_json() const { return to_json(machine_.state()).dump(); }

  std::string export_svg() const {
    const auto traces = machine_.pen_traces();
    if (traces.empty()) {
      return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
             "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"0\" height=\"0\"/>\n";
    }
    return to_svg(traces);
  }

  std::size_t max_queued() const { return max_queued_; }

 private:
  void schedule() {
    timer_.expires_at(next_tick_);
    timer_.async_wait([this](beast::error_code ec) {
      if (ec) return;
      on_tick();
      next_tick_ += period_;
      schedule();
    });
  }

  void on_tick();

  Machine machine_;
  net::steady_timer timer_;
  std::chrono::steady_clock::duration period_;
  std::chrono::steady_clock::time_point next_tick_;
  std::size_t max_queued_;
  std::unordered_set<std::shared_ptr<WsSession>> sessions_;
};

class WsSession : public std::enable_shared_from_this<WsSession> {
 public:
  WsSession(tcp::socket&& socket, Hub& hub) : ws_(std::move(socket)), hub_(hub) {}

  void run(http::request<http::string_body> request) {
    ws_.set_option(websocket::stream_base::timeout::suggested(beast::role_type::server));
    ws_.async_accept(request, [self = shared_from_this()](beast::error_code ec) {
      if (ec) {
        spdlog::debug("websocket accept failed: {}", ec.message());
        return;
      }
      self->hub_.join(self);
      self->read();
    });
  }

  // Sample frames may be dropped for a slow subscriber; replies never are.
  void send(std::string frame, bool droppable) {
    if (closed_) return;
    if (droppable && queue_.size() >= hub_.max_queued()) {
      ++dropped_;
      return;
    }
    queue_.push_back(std::move(frame));
    if (queue_.size() == 1) write();
  }

 private:
  void read() {
    ws_.async_read(buffer_, [self = shared_from_this()](beast::error_code ec, std::size_t) {
      if (ec) {
        self->close();
        return;
      }
      std::string text = beast::buffers_to_string(self->buffer_.data());
      self->buffer_.consume(self->buffer_.size());
      self->hub_.on_message(self, text);
      self->read();
    });
  }

  void write() {
    ws_.text(true);
    ws_.async_write(net::buffer(queue_.front()), [self = shared_from_this()](beast::error_code ec, std::size_t) {
      if (ec) {
        self->close();
        return;
      }
      self->queue_.pop_front();
      if (!self->queue_.empty()) self->write();
    });
  }

  void close() {
    if (closed_) return;
    closed_ = true;
    if (dropped_ > 0) spdlog::info("subscriber left after dropping {} frames", dropped_);
    hub_.leave(shared_from_this());
  }

  websocket::stream<beast::tcp_stream> ws_;
  beast::flat_buffer buffer_;
  std::deque<std::string> queue_;
  Hub& hub_;
  std::uint64_t dropped_ = 0;
  bool closed_ = false;
};

void Hub::on_message(const std::shared_ptr<WsSession>& from, const std::string& text) {
  ControlMessage message;
  try {
    message = message_from_json(Json::parse(text));
  } catch (const std::exception& e) {
    Json error{{"type", "error"}, {"code", "BadMessage"}, {"message", e.what()}};
    from->send(error.dump(), false);
    return;
  }
  const Reply reply = machine_.submit(message);
  spdlog::debug("{} -> {}", text, reply.ok ? "ack" : reply.detail);
  Json doc = to_json(reply);
  if (std::holds_alternative<msg::Snapshot>(message)) doc["state"] = to_json(machine_.state());
  from->send(doc.dump(), false);
}

void Hub::on_tick() {
  const auto event = machine_.tick();
  if (!event) return;
  const std::string frame = to_json(*event).dump();
  // Copy: a failing send may remove the session from the set.
  const auto subscribers = sessions_;
  for (const auto& session : subscribers) session->send(frame, true);
}

class HttpSession : public std::enable_shared_from_this<HttpSession> {
 public:
  HttpSession(tcp::socket&& socket, Hub& hub) : stream_(std::move(socket)), hub_(hub) {}

  void run() { read(); }

 private:
  void read() {
    request_ = {};
    stream_.expires_after(std::chrono::seconds(30));
    http::async_read(stream_, buffer_, request_, [self = shared_from_this()](beast::error_code ec, std::size_t) {
      if (ec) return;
      self->dispatch();
    });
  }

  void dispatch() {
    if (websocket::is_upgrade(request_)) {
      if (request_.target() == "/machine") {
        stream_.expires_never();
        std::make_shared<WsSession>(stream_.release_socket(), hub_)->run(std::move(request_));
        return;
      }
      respond(http::status::not_found, "text/plain", "websocket endpoint is /machine\n");
      return;
    }
    if (request_.method() != http::verb::get) {
      respond(http::status::method_not_allowed, "text/plain", "only GET is supported\n");
    } else if (request_.target() == "/state") {
      respond(http::status::ok, "application/json", hub_.state_json());
    } else if (request_.target() == "/export.svg") {
      respond(http::status::ok, "image/svg+xml", hub_.export_svg());
    } else {
      respond(http::status::not_found, "text/plain", "not found\n");
    }
  }

  void respond(http::status status, const char* content_type, std::string body) {
    auto response = std::make_shared<http::response<http::string_body>>(status, request_.version());
    response->set(http::field::server, "trochoid-mill");
    response->set(http::field::content_type, content_type);
    response->keep_alive(request_.keep_alive());
    response->body() = std::move(body);
    response->prepare_payload();
    http::async_write(stream_, *response,
                      [self = shared_from_this(), response](beast::error_code ec, std::size_t) {
                        if (ec) return;
                        if (response->keep_alive()) {
                          self->read();
                        } else {
                          beast::error_code ignored;
                          self->stream_.socket().shutdown(tcp::socket::shutdown_send, ignored);
                        }
                      });
  }

  beast::tcp_stream stream_;
  beast::flat_buffer buffer_;
  http::request<http::string_body> request_;
  Hub& hub_;
};

}  // namespace

struct ControlServer::Impl {
  explicit Impl(ServerOptions opts) : options(std::move(opts)), acceptor(ioc), hub(ioc, options) {}

  void listen() {
    const tcp::endpoint endpoint(net::ip::make_address(options.address), options.port);
    acceptor.open(endpoint.protocol());
    acceptor.set_option(net::socket_base::reuse_address(true));
    acceptor.bind(endpoint);
    acceptor.listen(net::socket_base::max_listen_connections);
    bound_port = acceptor.local_endpoint().port();
    spdlog::info("control service listening on {}:{}", options.address, bound_port.load());
    accept();
    hub.start_ticking();
  }

  void accept() {
    acceptor.async_accept(net::make_strand(ioc), [this](beast::error_code ec, tcp::socket socket) {
      if (ec) return;
      std::make_shared<HttpSession>(std::move(socket), hub)->run();
      accept();
    });
  }

  void shutdown() {
    beast::error_code ignored;
    acceptor.close(ignored);
    hub.stop_ticking();
    ioc.stop();
  }

  ServerOptions options;
  net::io_context ioc{1};
  tcp::acceptor acceptor;
  Hub hub;
  std::thread thread;
  std::atomic<unsigned short> bound_port{0};
};

ControlServer::ControlServer(ServerOptions options) : impl_(std::make_unique<Impl>(std::move(options))) {}

ControlServer::~ControlServer() { stop(); }

void ControlServer::start() {
  impl_->listen();
  impl_->thread = std::thread([this] { impl_->ioc.run(); });
}

void ControlServer::stop() {
  if (!impl_) return;
  net::post(impl_->ioc, [this] { impl_->shutdown(); });
  if (impl_->thread.joinable()) impl_->thread.join();
}

void ControlServer::run() {
  impl_->listen();
  net::signal_set signals(impl_->ioc, SIGINT, SIGTERM);
  signals.async_wait([this](beast::error_code, int) { impl_->shutdown(); });
  impl_->ioc.run();
}

unsigned short ControlServer::port() const { return impl_->bound_port.load(); }

}  // namespace trochoid
