#include "lambda_lab/store.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>

#include <json.hpp>

#include "lambda_lab/errors.hpp"
#include "lambda_lab/io.hpp"

namespace lambda_lab {

namespace {

using ojson = nlohmann::ordered_json;

class StoreLock {
  public:
    explicit StoreLock(const std::filesystem::path& file) {
        fd_ = ::open(file.c_str(), O_RDWR | O_CREAT, 0644);
        if (fd_ < 0) throw InvalidArgument("cannot open lock file " + file.string());
        if (::flock(fd_, LOCK_EX) != 0) {
            ::close(fd_);
            throw InvalidArgument("cannot lock " + file.string());
        }
    }
    ~StoreLock() {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
    }
    StoreLock(const StoreLock&) = delete;
    StoreLock& operator=(const StoreLock&) = delete;

  private:
    int fd_ = -1;
};

std::string sanitize(const std::string& key) {
    std::string out;
    for (std::size_t t = 0; t < key.size(); ++t) {
        unsigned char c = key[t];
        if (c == 0xC3 && t + 1 < key.size() && static_cast<unsigned char>(key[t + 1]) == 0x97) {
            out += 'x';
            ++t;
        } else if (c == ':') {
            out += '_';
        } else if (c == ',') {
            out += '-';
        } else {
            out += static_cast<char>(c);
        }
    }
    return out;
}

std::string utc_now() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

ojson opt(const std::optional<int>& v) { return v ? ojson(*v) : ojson(); }

std::optional<int> get_opt(const nlohmann::json& j, const char* field) {
    if (!j.contains(field) || j[field].is_null()) return std::nullopt;
    return j[field].get<int>();
}

}  // namespace

std::string record_status(const Expectation& claim, std::optional<int> exact, std::optional<int> lower,
                          std::optional<int> constructed) {
    if (!exact) return lower ? "bounds" : "unsolved";
    switch (claim.kind) {
        case Expectation::Kind::unresolved: return "no-claim";
        case Expectation::Kind::conflicting: return "paper-discrepancy";
        case Expectation::Kind::value: break;
    }
    if (*claim.value() != *exact) return "paper-discrepancy";
    if (constructed && *constructed != *exact) return "construction-mismatch";
    return "match";
}

std::string record_to_json(const ResultRecord& rec) {
    ojson j;
    j["key"] = rec.key;
    j["claimed"] = rec.claimed;
    j["exact"] = opt(rec.exact);
    j["lower"] = opt(rec.lower);
    j["upper"] = opt(rec.upper);
    j["constructed"] = opt(rec.constructed);
    j["scheme"] = rec.scheme;
    j["method"] = rec.method;
    j["witness_path"] = rec.witness_path;
    j["timestamp"] = rec.timestamp;
    j["status"] = rec.status;
    j["nodes"] = rec.nodes;
    return j.dump(2) + "\n";
}

ResultRecord record_from_json(const std::string& text, const std::string& name) {
    try {
        auto j = nlohmann::json::parse(text);
        ResultRecord r;
        r.key = j.at("key").get<std::string>();
        r.claimed = j.at("claimed").get<std::string>();
        r.exact = get_opt(j, "exact");
        r.lower = get_opt(j, "lower");
        r.upper = get_opt(j, "upper");
        r.constructed = get_opt(j, "constructed");
        r.scheme = j.value("scheme", "");
        r.method = j.value("method", "");
        r.witness_path = j.value("witness_path", "");
        r.timestamp = j.value("timestamp", "");
        r.status = j.value("status", "");
        r.nodes = j.value("nodes", std::uint64_t{0});
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw DataIntegrityError(name, e.what());
    }
}

ResultStore::ResultStore(std::filesystem::path root) : root_(std::move(root)) {
    std::filesystem::create_directories(root_ / "records");
    std::filesystem::create_directories(root_ / "witnesses");
}

std::filesystem::path ResultStore::default_root() {
    if (const char* env = std::getenv("LAMBDA_LAB_STORE"); env && *env) return env;
    return "lambda_lab_store";
}

std::filesystem::path ResultStore::record_path(const std::string& key) const {
    return root_ / "records" / (sanitize(key) + ".json");
}

std::optional<ResultRecord> ResultStore::load(const InstanceKey& key) const {
    auto path = record_path(to_string(key));
    if (!std::filesystem::exists(path)) return std::nullopt;
    return record_from_json(read_file(path), path.string());
}

std::vector<ResultRecord> ResultStore::all() const {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(root_ / "records"))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<ResultRecord> out;
    for (const auto& f : files) out.push_back(record_from_json(read_file(f), f.string()));
    return out;
}

ResultRecord ResultStore::save(ResultRecord rec, const Labeling* witness) {
    auto key = parse_instance_key(rec.key);
    if (rec.exact) {
        if (!witness) throw InvalidArgument(rec.key + ": an exact record needs a witness");
        if (witness->span() != *rec.exact)
            throw InvalidArgument(rec.key + ": witness span " + std::to_string(witness->span()) + " != exact " +
                                  std::to_string(*rec.exact));
    }
    if (witness) {
        auto g = build_graph(key);
        if (auto v = verify(g, *witness, key.h, key.k); !v.empty())
            throw InvalidArgument(rec.key + ": witness fails verification: " + to_string(v.front()));
    }
    if (rec.timestamp.empty()) rec.timestamp = utc_now();

    StoreLock lock(root_ / ".lock");
    if (witness) {
        auto body = labeling_to_json(rec.key, *witness);
        char name[32];
        std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a64(body)));
        auto rel = std::filesystem::path("witnesses") / name;
        if (!std::filesystem::exists(root_ / rel)) write_file_atomic(root_ / rel, body);
        rec.witness_path = rel.generic_string();
    }
    write_file_atomic(record_path(rec.key), record_to_json(rec));
    return rec;
}

Labeling ResultStore::load_witness(const ResultRecord& rec) const {
    if (rec.witness_path.empty()) throw InvalidArgument(rec.key + ": record has no witness");
    auto path = root_ / rec.witness_path;
    if (!std::filesystem::exists(path)) throw DataIntegrityError(path.string(), "witness file missing");
    return parse_labeling_json(read_file(path), path.string()).labeling;
}

}  // namespace lambda_lab
