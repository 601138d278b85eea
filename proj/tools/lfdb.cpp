// lfdb: build catalogs, ingest and dump text data, serve the JSON API.
#include <csignal>
#include <chrono>
#include <fstream>
#include <iostream>
#include <pthread.h>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "lfdb/catalog/catalog.hpp"
#include "lfdb/error.hpp"
#include "lfdb/knowl/knowl.hpp"
#include "lfdb/store/store.hpp"
#include "lfdb/webapi/api.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kInput = 2;

class Manifest {
 public:
  template <typename F>
  void task(const std::string& name, F&& fn) {
    const auto start = std::chrono::steady_clock::now();
    json records = fn();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    tasks_.push_back({{"task", name}, {"seconds", secs}, {"records", records}});
  }
  json& parameters() { return params_; }

  void print(const lfdb::store::Store& store) const {
    json counts = json::object();
    for (const auto& name : store.collection_names()) counts[name] = store.size(name);
    std::cout << json{{"tasks", tasks_}, {"parameters", params_}, {"counts", counts}}.dump(2) << "\n";
  }

 private:
  json tasks_ = json::array();
  json params_ = json::object();
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw lfdb::NotFoundError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Writer {
  lfdb::store::DirectoryLock lock;
  std::unique_ptr<lfdb::store::Store> store;
  explicit Writer(const fs::path& dir) : lock(dir), store(lfdb::store::Store::open(dir, true)) {
    lfdb::catalog::ensure_collections(*store);
  }
  ~Writer() {
    try {
      store->compact();
    } catch (const std::exception& e) {
      std::cerr << "warning: compaction failed: " << e.what() << "\n";
    }
  }
};

std::size_t ingest_file(lfdb::store::Store& store, const std::string& collection, const std::string& path) {
  if (!store.has_collection(collection)) store.create_collection(collection);
  const std::string text = read_text(path);
  try {
    return store.ingest_text(collection, text);
  } catch (const std::exception& e) {
    throw lfdb::ParseError(path + ": " + e.what());
  }
}

int serve(const fs::path& dir, const std::string& host, int port) {
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  lfdb::webapi::Server server(dir);
  const int bound = server.bind(host, port);
  if (bound <= 0) throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port));
  std::cerr << "listening on " << host << ":" << bound << std::endl;
  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    server.stop();
  });
  server.run();
  // run() can also end without a signal; release the waiter
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lfdb: L-functions database tools"};
  app.require_subcommand(1);

  std::string data_dir = "lfdb-data";
  std::uint64_t max_modulus = 20, coeffs = 1000;
  double zeros_to = 30.0;
  unsigned threads = 1;
  auto* build = app.add_subcommand("build-characters", "Build the primitive Dirichlet character catalog");
  build->add_option("--max-modulus", max_modulus, "Largest modulus M")->check(CLI::Range(1ull, 100000ull));
  build->add_option("--coeffs", coeffs, "Coefficient bound X")->check(CLI::Range(1ull, 10000000ull));
  build->add_option("--zeros-to", zeros_to, "Zero-scan ceiling T")->check(CLI::Range(0.0, 1000.0));
  build->add_option("--threads", threads, "Worker threads for zero scans")->check(CLI::Range(1u, 64u));
  build->add_option("--data", data_dir, "Data directory");

  std::string collection, file, out = "-";
  auto* ingest = app.add_subcommand("ingest", "Ingest a text data file into a collection");
  ingest->add_option("--collection", collection, "Collection name")->required();
  ingest->add_option("--file", file, "Input file")->required();
  ingest->add_option("--data", data_dir, "Data directory");

  auto* dump = app.add_subcommand("dump", "Write a collection in its text format");
  dump->add_option("--collection", collection, "Collection name")->required();
  dump->add_option("--out", out, "Output file, - for stdout");
  dump->add_option("--data", data_dir, "Data directory");

  int port = 8080;
  std::string host = "127.0.0.1";
  auto* srv = app.add_subcommand("serve", "Serve the JSON API");
  srv->add_option("--port", port, "TCP port (0 picks one)")->check(CLI::Range(0, 65535));
  srv->add_option("--host", host, "Bind address");
  srv->add_option("--data", data_dir, "Data directory")->required();

  std::string seed_dir = LFDB_SEED_DIR;
  auto* seed = app.add_subcommand("seed", "Ingest the shipped seed files");
  seed->add_option("--from", seed_dir, "Directory holding the seed files");
  seed->add_option("--data", data_dir, "Data directory");

  auto* enrich = app.add_subcommand("enrich", "Compute L-functions for stored curves and quadratic fields");
  enrich->add_option("--coeffs", coeffs, "Coefficient bound X")->check(CLI::Range(1ull, 200000ull));
  enrich->add_option("--data", data_dir, "Data directory");

  std::string kid, title, content, content_file, author = "anonymous";
  auto* ksave = app.add_subcommand("knowl-save", "Save a new version of a knowl");
  ksave->add_option("--id", kid, "Knowl id")->required();
  ksave->add_option("--title", title, "Title")->required();
  auto* copt = ksave->add_option("--content", content, "Content text");
  ksave->add_option("--content-file", content_file, "Read content from a file")->excludes(copt);
  ksave->add_option("--author", author, "Author");
  ksave->add_option("--data", data_dir, "Data directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInput;
  }

  try {
    if (*srv) return serve(data_dir, host, port);

    if (*dump) {
      const auto store = lfdb::store::Store::open(data_dir, false);
      const std::string text = store->dump_text(collection);
      if (out == "-") {
        std::cout << text;
      } else {
        std::ofstream f(out, std::ios::binary | std::ios::trunc);
        f << text;
        if (!f) throw std::runtime_error("cannot write " + out);
      }
      return kOk;
    }

    Writer w(data_dir);
    Manifest m;
    if (*build) {
      m.parameters() = {{"max_modulus", max_modulus}, {"coefficient_bound", coeffs}, {"zeros_to", zeros_to}};
      m.task("build-characters", [&] {
        const auto s = lfdb::catalog::build_character_catalog(
            *w.store, {max_modulus, coeffs, zeros_to, threads});
        return json{{"characters", s.characters}, {"lfunctions", s.lfunctions}, {"zeros", s.zeros}};
      });
    } else if (*ingest) {
      m.parameters() = {{"collection", collection}, {"file", file}};
      m.task("ingest", [&] { return json{{collection, ingest_file(*w.store, collection, file)}}; });
    } else if (*seed) {
      m.parameters() = {{"from", seed_dir}};
      for (const char* name : {"number_fields", "elliptic_curves_q", "notes", "knowls"}) {
        for (const char* ext : {".txt", ".jsonl"}) {
          const fs::path p = fs::path(seed_dir) / (std::string(name) + ext);
          if (!fs::exists(p)) continue;
          m.task(std::string("seed ") + p.filename().string(),
                 [&] { return json{{name, ingest_file(*w.store, name, p.string())}}; });
        }
      }
    } else if (*enrich) {
      m.parameters() = {{"coefficient_bound", coeffs}};
      m.task("enrich", [&] {
        const auto s = lfdb::catalog::enrich(*w.store, coeffs);
        return json{{"curves", s.curves}, {"fields", s.fields}};
      });
    } else if (*ksave) {
      if (!content_file.empty()) content = read_text(content_file);
      m.parameters() = {{"id", kid}};
      m.task("knowl-save", [&] {
        const auto k = lfdb::knowl::save_knowl(*w.store, kid, title, content, author);
        return json{{"id", k.id}, {"version", k.version}};
      });
    }
    m.print(*w.store);
    return kOk;
  } catch (const lfdb::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const lfdb::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const lfdb::NotFoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const lfdb::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const lfdb::BusyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
