#include <doctest.h>

#include <filesystem>
#include <thread>

#include "lambda_lab/errors.hpp"
#include "lambda_lab/io.hpp"
#include "lambda_lab/store.hpp"
#include "lambda_lab/table.hpp"

using namespace lambda_lab;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

ResultRecord exact_record(const InstanceKey& key, int span) {
    ResultRecord r;
    r.key = to_string(key);
    r.claimed = to_string(expected_lambda(key));
    r.exact = span;
    r.method = "backtrack";
    r.status = record_status(expected_lambda(key), span, std::nullopt, std::nullopt);
    return r;
}

}  // namespace

TEST_CASE("record status") {
    auto four = expected_lambda(parse_instance_key("PP:3x3:1,1:all"));
    CHECK(record_status(four, 4, std::nullopt, 4) == "match");
    CHECK(record_status(four, 5, std::nullopt, 5) == "paper-discrepancy");
    CHECK(record_status(four, 4, std::nullopt, 5) == "construction-mismatch");
    CHECK(record_status(four, std::nullopt, 3, 4) == "bounds");
    CHECK(record_status(four, std::nullopt, std::nullopt, 4) == "unsolved");
    auto conflict = expected_lambda(parse_instance_key("PC:3x14:1,1:all"));
    CHECK(record_status(conflict, 5, std::nullopt, 5) == "paper-discrepancy");
    auto none = expected_lambda(parse_instance_key("CC:7x9:1,1:all"));
    CHECK(record_status(none, 5, std::nullopt, std::nullopt) == "no-claim");
}

TEST_CASE("record json round trip") {
    ResultRecord r;
    r.key = "PC:3\xC3\x97" "3:1,1:all";
    r.claimed = "5";
    r.exact = 5;
    r.constructed = 5;
    r.scheme = "c3-tile";
    r.method = "backtrack";
    r.witness_path = "witnesses/0000000000000001.json";
    r.timestamp = "2026-01-01T00:00:00Z";
    r.status = "match";
    r.nodes = 17;
    CHECK(record_from_json(record_to_json(r)) == r);
    ResultRecord b;
    b.key = "PC:5\xC3\x97" "9:1,1:all";
    b.claimed = "5";
    b.lower = 4;
    b.upper = 6;
    b.status = "bounds";
    CHECK(record_from_json(record_to_json(b)) == b);
    CHECK_THROWS_AS(record_from_json("{\"claimed\": \"4\"}"), DataIntegrityError);
    CHECK_THROWS_AS(record_from_json("not json"), DataIntegrityError);
}

TEST_CASE("store keeps verified witnesses") {
    TempDir dir("lambda_lab_store_test");
    ResultStore store(dir.path);
    auto key = parse_instance_key("PC:3x3:1,1:all");
    auto r = solve_exact(build_graph(key), 1, 1);
    auto saved = store.save(exact_record(key, r.span), &r.witness);
    CHECK_FALSE(saved.witness_path.empty());
    CHECK_FALSE(saved.timestamp.empty());
    CHECK(fs::exists(dir.path / saved.witness_path));

    auto loaded = store.load(key);
    REQUIRE(loaded);
    CHECK(*loaded == saved);
    CHECK(store.load_witness(*loaded) == r.witness);
    CHECK_FALSE(store.load(parse_instance_key("PC:3x4:1,1:all")));

    // no exact value without a witness, a matching span and a valid labeling
    CHECK_THROWS_AS(store.save(exact_record(key, 5), nullptr), InvalidArgument);
    CHECK_THROWS_AS(store.save(exact_record(key, 4), &r.witness), InvalidArgument);
    auto broken = r.witness.labels();
    std::swap(broken[0], broken[1]);
    broken[0] = broken[1];
    CHECK_THROWS_AS(store.save(exact_record(key, Labeling(broken).span()), nullptr), InvalidArgument);
    Labeling bad(broken);
    CHECK_THROWS_AS(store.save(exact_record(key, bad.span()), &bad), InvalidArgument);
}

TEST_CASE("every stored witness re-verifies after reload") {
    TempDir dir("lambda_lab_store_roundtrip");
    ResultStore store(dir.path);
    for (const char* s : {"PP:3x3:1,1:0", "PP:4x5:1,1:all", "PC:2x7:1,1:all", "PC:3x7:1,1:all", "PC:4x6:1,1:1",
                          "CC:5x5:1,1:all", "PC:3x5:2,1:all"}) {
        auto key = parse_instance_key(s);
        auto r = solve_exact(build_graph(key), key.h, key.k);
        store.save(exact_record(key, r.span), &r.witness);
    }
    auto all = store.all();
    CHECK(all.size() == 7);
    for (const auto& rec : all) {
        auto key = parse_instance_key(rec.key);
        auto w = store.load_witness(rec);
        CHECK(verify(build_graph(key), w, key.h, key.k).empty());
        CHECK(w.span() == rec.exact);
    }
}

TEST_CASE("concurrent writers leave a consistent store") {
    TempDir dir("lambda_lab_store_concurrent");
    auto key = parse_instance_key("PC:3x7:1,1:all");
    auto r = solve_exact(build_graph(key), 1, 1);
    std::vector<std::thread> pool;
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([&] {
            ResultStore s(dir.path);
            for (int rep = 0; rep < 10; ++rep) s.save(exact_record(key, r.span), &r.witness);
        });
    for (auto& t : pool) t.join();
    ResultStore store(dir.path);
    auto rec = store.load(key);
    REQUIRE(rec);
    CHECK(store.load_witness(*rec) == r.witness);
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(dir.path / "witnesses")) files += e.path().extension() == ".json";
    CHECK(files == 1);
}

TEST_CASE("default store root honours the environment") {
    ::setenv("LAMBDA_LAB_STORE", "/tmp/somewhere", 1);
    CHECK(ResultStore::default_root() == fs::path("/tmp/somewhere"));
    ::unsetenv("LAMBDA_LAB_STORE");
    CHECK(ResultStore::default_root() == fs::path("lambda_lab_store"));
}

TEST_CASE("pp table matches everywhere and is idempotent") {
    TempDir dir("lambda_lab_table_pp");
    ResultStore store(dir.path);
    auto first = run_table(Family::PP, 6, 6, store);
    CHECK(first.rows.size() == 25);
    CHECK(first.solver_calls == 25);
    for (const auto& r : first.rows) CHECK_MESSAGE(r.status == "match", r.m, "x", r.n);
    CHECK(first.discrepancies.empty());

    auto second = run_table(Family::PP, 6, 6, store);
    CHECK(second.solver_calls == 0);
    CHECK(second.cache_hits == 25);
    CHECK(second.csv() == first.csv());
    CHECK(first.csv().rfind("m,n,claimed,constructed,exact,status\n2,2,1,1,1,match\n", 0) == 0);
    CHECK(first.csv().find('\r') == std::string::npos);
}

TEST_CASE("pc table surfaces the n = 14 conflict as its only discrepancy") {
    TempDir dir("lambda_lab_table_pc");
    ResultStore store(dir.path);
    auto report = run_table(Family::PC, 4, 14, store);
    REQUIRE(report.discrepancies.size() == 1);
    const auto& d = report.discrepancies.front();
    CHECK(d.claimed == "4|5");
    CHECK(d.exact == std::set<int>{5});
    CHECK(d.cells == std::vector<std::pair<int, int>>{{3, 14}, {4, 14}});
    for (const auto& r : report.rows) {
        if (r.n == 14 && r.m >= 3)
            CHECK(r.status == "paper-discrepancy");
        else
            CHECK_MESSAGE(r.status == "match", r.m, "x", r.n);
        if (r.n % 5 == 0 && r.m >= 3) {
            CHECK(r.claimed == "4");
            CHECK(r.exact == 4);
        }
    }
    CHECK(report.csv().find("3,14,4|5,5,5,paper-discrepancy\n") != std::string::npos);
    CHECK(report.pretty().find("4|5") != std::string::npos);
    CHECK(run_table(Family::PC, 4, 14, store).csv() == report.csv());
}

TEST_CASE("node limits turn table cells into bounds") {
    TempDir dir("lambda_lab_table_bounds");
    ResultStore store(dir.path);
    SearchConfig cfg;
    cfg.node_limit = 1;
    auto report = run_table(Family::PC, 5, 9, store, cfg);
    bool saw_bounds = false;
    for (const auto& r : report.rows) saw_bounds |= r.status == "bounds";
    CHECK(saw_bounds);
    CHECK_THROWS_AS(run_table(Family::CC, 4, 4, store), InvalidArgument);
}
