#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "motdt/acceptance.hpp"
#include "motdt/error.hpp"
#include "motdt/report.hpp"
#include "motdt/serialize.hpp"

using namespace motdt;

namespace {

std::optional<int> parse_b(const std::string& s) {
    if (s == "inf" || s == "infinity") return std::nullopt;
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw Error(Errc::InvalidParams, "b must be a positive integer or inf, got '" + s + "'");
    }
    if (pos != s.size()) throw Error(Errc::InvalidParams, "b must be a positive integer or inf, got '" + s + "'");
    return v;
}

std::vector<std::optional<int>> parse_bs(const std::string& s) {
    std::vector<std::optional<int>> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_b(tok));
    if (out.empty()) throw Error(Errc::InvalidParams, "--bs needs at least one value");
    return out;
}

void validate_family(int a, const std::optional<int>& b) { validate_params(FamilyParams{a, b, true}); }

int default_order() {
    const char* env = std::getenv("MOTDT_ORDER_DEFAULT");
    if (!env) return kDefaultOrder;
    std::string s(env);
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != s.size()) throw Error(Errc::InvalidParams, "MOTDT_ORDER_DEFAULT must be an integer");
    return v;
}

void check_order(int order) {
    if (order < 3) throw Error(Errc::InvalidParams, "order must be >= 3");
}

// "lo:hi", or a single n meaning -n:n
std::pair<long long, long long> parse_range(const std::string& s) {
    auto num = [&](const std::string& t) {
        std::size_t pos = 0;
        long long v = 0;
        try {
            v = std::stoll(t, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != t.size()) throw Error(Errc::InvalidParams, "bad range '" + s + "'");
        return v;
    };
    auto c = s.find(':');
    std::pair<long long, long long> r;
    if (c == std::string::npos) {
        long long n = num(s);
        if (n < 0) throw Error(Errc::InvalidParams, "range bound must be >= 0");
        r = {-n, n};
    } else {
        r = {num(s.substr(0, c)), num(s.substr(c + 1))};
    }
    if (r.first > r.second) throw Error(Errc::InvalidParams, "empty range '" + s + "'");
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Motivic DT invariants of a family of length-2 flops"};
    app.require_subcommand(1);

    int a = 2;
    std::string b = "inf", format = "json", bs = "inf", range = "4";
    int order = 0;

    auto* inv = app.add_subcommand("invariants", "BPS invariants, GV numbers and contraction algebra dimensions");
    inv->add_option("--a", a, "a >= 2")->required();
    inv->add_option("--b", b, "b >= 1 or inf")->required();
    inv->add_option("--order", order, "truncation order (default 6 or MOTDT_ORDER_DEFAULT)");
    inv->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    auto* res = app.add_subcommand("resolve", "charts and decorated dual graph of the embedded resolution");
    res->add_option("--a", a, "a >= 2")->required();
    res->add_option("--b", b, "b >= 1 or inf")->required();
    res->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

    auto* part = app.add_subcommand("partition", "the truncated partition function");
    part->add_option("--a", a, "a >= 2")->required();
    part->add_option("--b", b, "b >= 1 or inf")->required();
    part->add_option("--order", order, "truncation order");

    auto* walls = app.add_subcommand("walls", "g-vectors of the walls and their dual stable rays");
    walls->add_option("--range", range, "lo:hi, or n for -n:n");
    walls->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));

    auto* cmp = app.add_subcommand("compare", "pairwise equality of reports across b");
    cmp->add_option("--a", a, "a >= 2")->required();
    cmp->add_option("--bs", bs, "comma separated list, e.g. 2,3,inf")->required();
    cmp->add_option("--order", order, "truncation order");

    auto* self = app.add_subcommand("selftest", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (order == 0) order = default_order();
        if (*inv) {
            auto bv = parse_b(b);
            validate_family(a, bv);
            check_order(order);
            InvariantsReport r = compute_report(a, bv, order);
            if (format == "text") std::cout << report_text(r);
            else std::cout << to_json(r).dump(2) << "\n";
        } else if (*res) {
            FamilyParams p{a, parse_b(b), true};
            validate_params(p);
            if (format == "text") std::cout << resolve_text(p);
            else std::cout << resolve_json(p).dump(2) << "\n";
        } else if (*part) {
            auto bv = parse_b(b);
            validate_family(a, bv);
            check_order(order);
            InvariantsReport r = compute_report(a, bv, order);
            json j = to_json(r.partition);
            j["params"] = {{"a", a}, {"b", b_string(bv)}};
            std::cout << j.dump(2) << "\n";
        } else if (*walls) {
            auto [lo, hi] = parse_range(range);
            if (format == "tsv") std::cout << walls_tsv(lo, hi);
            else std::cout << walls_json(lo, hi).dump(2) << "\n";
        } else if (*cmp) {
            auto bv = parse_bs(bs);
            for (const auto& x : bv) validate_family(a, x);
            check_order(order);
            auto m = compare_flops(a, bv, order);
            json labels = json::array();
            for (const auto& x : bv) labels.push_back(b_string(x));
            bool all = true;
            for (const auto& row : m)
                for (bool x : row) all = all && x;
            std::cout << json{{"a", a}, {"order", order}, {"bs", labels}, {"equal", m}, {"all_equal", all}}.dump(2)
                      << "\n";
        } else if (*self) {
            bool ok = true;
            for (const auto& r : run_acceptance()) {
                std::cout << format_result(r) << "\n";
                ok = ok && r.pass;
            }
            return ok ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "motdt: " << e.what() << "\n";
        return e.is_validation() ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "motdt: internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
