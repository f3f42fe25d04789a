#include "lambda_lab/instance.hpp"

#include <charconv>
#include <vector>

#include "lambda_lab/errors.hpp"

namespace lambda_lab {

namespace {

constexpr std::string_view kTimes = "\xC3\x97";  // U+00D7
constexpr const char* kGrammar = "expected FAMILY:m\xC3\x97n:h,k:component, e.g. PC:4\xC3\x97" "7:1,1:all";

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) return parts;
        start = pos + 1;
    }
}

int parse_int(std::string_view s, std::string_view whole) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || (s.size() > 1 && s[0] == '0'))
        throw ParseError("bad number '" + std::string(s) + "' in '" + std::string(whole) + "'; " + kGrammar);
    return v;
}

}  // namespace

std::string to_string(Family f) {
    switch (f) {
        case Family::PP: return "PP";
        case Family::PC: return "PC";
        case Family::CC: return "CC";
    }
    return "PP";
}

Family parse_family(std::string_view s) {
    if (s == "PP" || s == "pp") return Family::PP;
    if (s == "PC" || s == "pc") return Family::PC;
    if (s == "CC" || s == "cc") return Family::CC;
    throw ParseError("unknown family '" + std::string(s) + "' (PP, PC or CC)");
}

void validate(const InstanceKey& key) {
    switch (key.family) {
        case Family::PP:
            if (key.m < 2 || key.n < 2) throw InvalidSize("PP needs m, n >= 2");
            break;
        case Family::PC:
            if (key.m < 2 || key.n < 3) throw InvalidSize("PC needs m >= 2 and n >= 3");
            break;
        case Family::CC:
            if (key.m < 3 || key.n < 3) throw InvalidSize("CC needs m, n >= 3");
            break;
    }
    if (key.h < 0 || key.k < 0) throw InvalidArgument("h and k must be non-negative");
    if (key.component && *key.component != 0 && *key.component != 1)
        throw InvalidArgument("component must be all, 0 or 1");
}

std::string to_string(const InstanceKey& key) {
    return to_string(key.family) + ':' + std::to_string(key.m) + std::string(kTimes) + std::to_string(key.n) +
           ':' + std::to_string(key.h) + ',' + std::to_string(key.k) + ':' +
           (key.component ? std::to_string(*key.component) : std::string("all"));
}

InstanceKey parse_instance_key(std::string_view s) {
    auto parts = split(s, ':');
    if (parts.size() != 4) throw ParseError("malformed instance key '" + std::string(s) + "'; " + kGrammar);
    InstanceKey key;
    key.family = parse_family(parts[0]);

    auto dims = parts[1];
    std::size_t sep = dims.find(kTimes);
    std::size_t sep_len = kTimes.size();
    if (sep == std::string_view::npos) {
        sep = dims.find('x');
        sep_len = 1;
    }
    if (sep == std::string_view::npos) throw ParseError("missing size separator in '" + std::string(s) + "'; " + kGrammar);
    key.m = parse_int(dims.substr(0, sep), s);
    key.n = parse_int(dims.substr(sep + sep_len), s);

    auto gaps = split(parts[2], ',');
    if (gaps.size() != 2) throw ParseError("expected h,k in '" + std::string(s) + "'; " + kGrammar);
    key.h = parse_int(gaps[0], s);
    key.k = parse_int(gaps[1], s);

    if (parts[3] == "all")
        key.component.reset();
    else if (parts[3] == "0")
        key.component = 0;
    else if (parts[3] == "1")
        key.component = 1;
    else
        throw ParseError("component must be all, 0 or 1 in '" + std::string(s) + "'");

    try {
        validate(key);
    } catch (const Error& e) {
        throw ParseError(std::string(e.what()) + " in '" + std::string(s) + "'");
    }
    return key;
}

Graph build_product(const InstanceKey& key) {
    validate(key);
    switch (key.family) {
        case Family::PP: return direct_product(path(key.m), path(key.n));
        case Family::PC: return direct_product(path(key.m), cycle(key.n));
        case Family::CC: return direct_product(cycle(key.m), cycle(key.n));
    }
    throw InvalidArgument("unknown family");
}

Graph build_graph(const InstanceKey& key) {
    auto g = build_product(key);
    if (!key.component) return g;
    auto parts = connected_components(g);
    if (static_cast<std::size_t>(*key.component) >= parts.size())
        throw InvalidArgument(to_string(key) + ": the product is connected, it has no component " +
                              std::to_string(*key.component));
    return std::move(parts.components[*key.component].graph);
}

}  // namespace lambda_lab
