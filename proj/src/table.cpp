#include "lambda_lab/table.hpp"

#include <map>
#include <sstream>

#include "lambda_lab/errors.hpp"

namespace lambda_lab {

namespace {

std::string cell(const std::optional<int>& v) { return v ? std::to_string(*v) : std::string(); }

}  // namespace

std::string TableReport::csv() const {
    std::string out = "m,n,claimed,constructed,exact,status\n";
    for (const auto& r : rows)
        out += std::to_string(r.m) + ',' + std::to_string(r.n) + ',' + r.claimed + ',' + cell(r.constructed) + ',' +
               cell(r.exact) + ',' + r.status + '\n';
    return out;
}

std::string TableReport::summary() const {
    std::ostringstream os;
    os << rows.size() << " cells, " << solver_calls << " solver calls, " << cache_hits << " cache hits\n";
    os << discrepancies.size() << " paper discrepanc" << (discrepancies.size() == 1 ? "y" : "ies") << "\n";
    for (const auto& d : discrepancies) {
        os << "  " << d.rule << "\n    claimed " << d.claimed << ", exact";
        for (int e : d.exact) os << ' ' << e;
        os << ", cells";
        for (auto [m, n] : d.cells) os << " (" << m << ',' << n << ')';
        os << '\n';
    }
    for (const auto& r : rows)
        if (r.status != "match" && r.status != "paper-discrepancy")
            os << "  (" << r.m << ',' << r.n << ") " << r.status << '\n';
    return os.str();
}

std::string TableReport::pretty() const {
    std::vector<std::string> order;
    std::map<std::string, std::pair<std::string, std::set<int>>> seen;
    for (const auto& r : rows) {
        auto [it, fresh] = seen.try_emplace(r.rule, r.claimed, std::set<int>{});
        if (fresh) order.push_back(r.rule);
        if (r.exact) it->second.second.insert(*r.exact);
    }
    std::size_t width = 4;
    for (const auto& rule : order) width = std::max(width, rule.size());
    std::ostringstream os;
    os << "rule" << std::string(width - 4, ' ') << "  claimed  exact\n";
    for (const auto& rule : order) {
        const auto& [claimed, exact] = seen[rule];
        os << rule << std::string(width - rule.size(), ' ') << "  " << claimed
           << std::string(claimed.size() < 7 ? 7 - claimed.size() : 0, ' ') << "  ";
        std::string values;
        for (int e : exact) values += (values.empty() ? "" : ",") + std::to_string(e);
        os << (values.empty() ? "-" : values) << '\n';
    }
    return os.str();
}

TableReport run_table(Family family, int max_m, int max_n, ResultStore& store, const SearchConfig& cfg) {
    if (family == Family::CC) throw InvalidArgument("tables exist for the pp and pc families");
    TableReport report;
    report.family = family;
    const int min_n = family == Family::PP ? 2 : 3;
    std::map<std::string, std::size_t> group_of;
    for (int m = 2; m <= max_m; ++m) {
        for (int n = min_n; n <= max_n; ++n) {
            InstanceKey key{family, m, n, 1, 1, std::nullopt};
            auto claim = expected_lambda(key);
            TableRow row{m, n, to_string(claim), std::nullopt, std::nullopt, "", claim.rule};

            auto rec = store.load(key);
            if (rec && rec->exact && rec->constructed) {
                ++report.cache_hits;
                row.exact = rec->exact;
                row.constructed = rec->constructed;
            } else {
                ResultRecord out;
                out.key = to_string(key);
                out.claimed = row.claimed;
                std::optional<Labeling> witness;
                if (rec && rec->exact) {
                    ++report.cache_hits;
                    out = *rec;
                    witness = store.load_witness(*rec);
                } else {
                    ++report.solver_calls;
                    try {
                        auto r = solve_exact(build_graph(key), 1, 1, cfg);
                        out.exact = r.span;
                        out.method = to_string(r.method);
                        out.nodes = r.nodes_explored;
                        witness = std::move(r.witness);
                    } catch (const ResourceLimit& e) {
                        out.lower = e.lower();
                        out.upper = e.upper();
                        out.method = "backtrack";
                        out.nodes = e.nodes();
                    }
                }
                try {
                    auto c = construct(key);
                    if (c.kind == SchemeKind::solver) ++report.solver_calls;
                    out.constructed = c.labeling.span();
                    out.scheme = c.scheme;
                } catch (const ResourceLimit&) {
                }
                out.timestamp.clear();
                out.status = record_status(claim, out.exact, out.lower, out.constructed);
                store.save(out, witness ? &*witness : nullptr);
                row.exact = out.exact;
                row.constructed = out.constructed;
            }
            row.status = row.exact ? record_status(claim, row.exact, std::nullopt, row.constructed) : "bounds";

            if (row.status == "paper-discrepancy") {
                auto [it, fresh] = group_of.try_emplace(claim.rule, report.discrepancies.size());
                if (fresh) report.discrepancies.push_back({claim.rule, row.claimed, {}, {}});
                auto& g = report.discrepancies[it->second];
                g.cells.emplace_back(m, n);
                if (row.exact) g.exact.insert(*row.exact);
            }
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

}  // namespace lambda_lab
