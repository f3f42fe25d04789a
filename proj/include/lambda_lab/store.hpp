#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "lambda_lab/constructions.hpp"
#include "lambda_lab/instance.hpp"
#include "lambda_lab/labeling.hpp"

namespace lambda_lab {

struct ResultRecord {
    std::string key;
    /// to_string(expected_lambda(key)): "4", "4|5" or "unresolved".
    std::string claimed;
    std::optional<int> exact;
    /// Bounds from a search that stopped early or a failed decision run.
    std::optional<int> lower;
    std::optional<int> upper;
    std::optional<int> constructed;
    std::string scheme;
    std::string method;
    /// Relative to the store root; empty when no witness was kept.
    std::string witness_path;
    std::string timestamp;
    std::string status;
    std::uint64_t nodes = 0;

    friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

/// match, paper-discrepancy, construction-mismatch, no-claim, bounds or unsolved.
std::string record_status(const Expectation& claim, std::optional<int> exact, std::optional<int> lower,
                          std::optional<int> constructed);

/// Directory of JSON records (records/<key>.json) and content-addressed witness
/// files (witnesses/<fnv1a64>.json). Writers are serialized through an advisory
/// lock on <root>/.lock; files are replaced atomically so readers need no lock.
class ResultStore {
  public:
    explicit ResultStore(std::filesystem::path root);
    /// $LAMBDA_LAB_STORE, or ./lambda_lab_store.
    static std::filesystem::path default_root();

    const std::filesystem::path& root() const noexcept { return root_; }

    std::optional<ResultRecord> load(const InstanceKey& key) const;
    std::vector<ResultRecord> all() const;

    /// Writes the witness (if any) and the record. An exact record must come
    /// with a witness that verifies on build_graph(key) with span == exact.
    ResultRecord save(ResultRecord rec, const Labeling* witness);

    Labeling load_witness(const ResultRecord& rec) const;

  private:
    std::filesystem::path record_path(const std::string& key) const;
    std::filesystem::path root_;
};

std::string record_to_json(const ResultRecord& rec);
ResultRecord record_from_json(const std::string& text, const std::string& name = "<record>");

}  // namespace lambda_lab
