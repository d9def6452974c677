#include "satchoice/choice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace satchoice {

ChoiceRule ChoiceRule::subcube(double a) {
    if (!(a > 0.0 && a < 1.0))
        throw std::invalid_argument("subcube fraction a must satisfy 0 < a < 1");
    return {Kind::SubcubePreference, a};
}

ChoiceRule ChoiceRule::parse(const std::string& text) {
    if (text == "most-positive") return most_positive();
    if (text == "uniform") return uniform();
    if (text.rfind("subcube:", 0) == 0) {
        const std::string arg = text.substr(8);
        std::size_t used = 0;
        const double a = std::stod(arg, &used);
        if (used != arg.size()) throw std::invalid_argument("bad subcube fraction: " + arg);
        return subcube(a);
    }
    throw std::invalid_argument("unknown rule '" + text +
                                "', expected most-positive|subcube:<a>|uniform");
}

std::string ChoiceRule::to_string() const {
    switch (kind) {
        case Kind::MostPositive: return "most-positive";
        case Kind::Uniform: return "uniform";
        case Kind::SubcubePreference: {
            char buf[32];
            std::snprintf(buf, sizeof buf, "subcube:%.17g", subcube_a);
            return buf;
        }
    }
    return "?";
}

GenConfig GenConfig::with_alpha(int n, int k, double alpha, int t, ChoiceRule rule,
                                std::uint64_t seed) {
    GenConfig cfg;
    cfg.n = n;
    cfg.k = k;
    cfg.alpha = alpha;
    cfg.m = static_cast<int>(std::floor(alpha * n));
    cfg.t = t;
    cfg.rule = rule;
    cfg.seed = seed;
    return cfg;
}

void GenConfig::check() const {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    if (m < 0) throw std::invalid_argument("m must be >= 0");
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    if (rule.kind == ChoiceRule::Kind::SubcubePreference &&
        !(rule.subcube_a > 0.0 && rule.subcube_a < 1.0))
        throw std::invalid_argument("subcube fraction a must satisfy 0 < a < 1");
}

std::string GenConfig::to_json() const {
    nlohmann::json j{{"n", n},       {"k", k},           {"m", m}, {"t", t},
                     {"rule", rule.to_string()}, {"seed", seed}};
    return j.dump();
}

GenConfig GenConfig::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    GenConfig cfg;
    cfg.n = j.at("n").get<int>();
    cfg.k = j.at("k").get<int>();
    if (j.contains("m"))
        cfg.m = j.at("m").get<int>();
    else
        cfg.m = static_cast<int>(std::floor(j.at("alpha").get<double>() * cfg.n));
    cfg.t = j.at("t").get<int>();
    cfg.rule = ChoiceRule::parse(j.at("rule").get<std::string>());
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.check();
    return cfg;
}

Clause random_clause(int n, int k, Rng& rng) {
    if (k > n) throw std::invalid_argument("random_clause: k > n");
    Clause c;
    c.literals.reserve(static_cast<std::size_t>(k));
    while (c.width() < k) {
        const int var = static_cast<int>(rng.below(static_cast<std::uint64_t>(n))) + 1;
        bool fresh = true;
        for (const Literal& lit : c.literals) fresh = fresh && lit.var != var;
        if (!fresh) continue;
        c.literals.push_back({var, rng.coin()});
    }
    return c;
}

namespace {

bool inside_subcube(const Clause& c, int boundary) {
    for (const Literal& lit : c.literals)
        if (lit.var > boundary) return false;
    return true;
}

}  // namespace

const Clause& choose(std::span<const Clause> candidates, const ChoiceRule& rule, int n,
                     Rng& rng) {
    if (candidates.empty()) throw std::invalid_argument("choose: empty candidate list");
    switch (rule.kind) {
        case ChoiceRule::Kind::Uniform:
            return candidates[0];
        case ChoiceRule::Kind::MostPositive: {
            int best = positive_count(candidates[0]);
            std::size_t winner = 0;
            std::size_t ties = 1;
            for (std::size_t i = 1; i < candidates.size(); ++i) {
                const int count = positive_count(candidates[i]);
                if (count > best) {
                    best = count;
                    winner = i;
                    ties = 1;
                } else if (count == best) {
                    // reservoir over ties keeps the pick uniform in one pass
                    ++ties;
                    if (rng.below(ties) == 0) winner = i;
                }
            }
            return candidates[winner];
        }
        case ChoiceRule::Kind::SubcubePreference: {
            const int boundary = static_cast<int>(std::floor(rule.subcube_a * n));
            std::size_t winner = candidates.size();
            std::size_t hits = 0;
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                if (!inside_subcube(candidates[i], boundary)) continue;
                ++hits;
                if (rng.below(hits) == 0) winner = i;
            }
            if (hits > 0) return candidates[winner];
            return candidates[rng.below(candidates.size())];
        }
    }
    throw std::logic_error("unreachable");
}

Formula generate(const GenConfig& cfg) {
    cfg.check();
    Formula f;
    f.n = cfg.n;
    f.width = cfg.k;
    f.clauses.reserve(static_cast<std::size_t>(cfg.m));
    Rng rng = derive_stream(cfg.seed, {});
    std::vector<Clause> candidates(static_cast<std::size_t>(cfg.t));
    for (int step = 0; step < cfg.m; ++step) {
        for (Clause& c : candidates) c = random_clause(cfg.n, cfg.k, rng);
        f.clauses.push_back(choose(candidates, cfg.rule, cfg.n, rng));
    }
    return f;
}

Clause reduce_most_positive(const Clause& c, int ell, Rng& rng) {
    if (ell > c.width()) throw std::invalid_argument("reduce_most_positive: ell > width");
    std::vector<Literal> positives, negatives;
    for (const Literal& lit : c.literals)
        (lit.positive ? positives : negatives).push_back(lit);

    auto sample = [&rng](std::vector<Literal>& pool, int count, std::vector<Literal>& out) {
        // partial Fisher-Yates
        for (int i = 0; i < count; ++i) {
            const std::size_t j =
                static_cast<std::size_t>(i) + rng.below(pool.size() - static_cast<std::size_t>(i));
            std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
            out.push_back(pool[static_cast<std::size_t>(i)]);
        }
    };

    Clause reduced;
    if (static_cast<int>(positives.size()) >= ell) {
        sample(positives, ell, reduced.literals);
    } else {
        reduced.literals = positives;
        sample(negatives, ell - static_cast<int>(positives.size()), reduced.literals);
    }
    return reduced;
}

Formula reduce_most_positive(const Formula& f, int ell, Rng& rng) {
    Formula out;
    out.n = f.n;
    out.width = ell;
    out.clauses.reserve(f.clauses.size());
    for (const Clause& c : f.clauses) out.clauses.push_back(reduce_most_positive(c, ell, rng));
    return out;
}

Formula subformula_in_U(const Formula& f, double a) {
    const int boundary = static_cast<int>(std::floor(a * f.n));
    Formula out;
    out.n = boundary;
    out.width = f.width;
    for (const Clause& c : f.clauses)
        if (inside_subcube(c, boundary)) out.clauses.push_back(c);
    return out;
}

}  // namespace satchoice
