#pragma once

#include "pgr/arity.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace pgr {

// Seeded generator with a draw rule fixed here rather than by the standard
// library's distributions, so sampled runs are reproducible everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Inclusive range.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

private:
    std::mt19937_64 engine_;
};

// Where the distinguished element may sit when checking neutrality.
// `outer_positions` places x first or last with the neutral letters forming one
// contiguous block; `every_position` also tries every interior slot.
enum class Placement { every_position, outer_positions };

template <class T>
std::vector<T> polyad_with(const T& subject, std::size_t pos, const T& fill, std::size_t n) {
    std::vector<T> polyad(n, fill);
    polyad[pos] = subject;
    return polyad;
}

inline std::vector<std::size_t> placement_slots(Placement placement, std::size_t n) {
    std::vector<std::size_t> slots;
    if (placement == Placement::outer_positions) {
        slots = {0, n - 1};
    } else {
        slots.resize(n);
        std::iota(slots.begin(), slots.end(), std::size_t{0});
    }
    return slots;
}

// op[x, e, ..., e] = x with x at each slot of `placement`.
template <class T>
bool is_neutral_for(const NaryOp<T>& op, const T& e, const T& x, Placement placement) {
    for (std::size_t slot : placement_slots(placement, op.arity)) {
        if (!(op(polyad_with(x, slot, e, op.arity)) == x)) return false;
    }
    return true;
}

// op[qbar, x, ..., x] = x with qbar at every slot.
template <class T>
bool is_querelement_of(const NaryOp<T>& op, const T& qbar, const T& x) {
    for (std::size_t slot = 0; slot < op.arity; ++slot) {
        if (!(op(polyad_with(qbar, slot, x, op.arity)) == x)) return false;
    }
    return true;
}

// Exhaustive querelement search over a finite universe.
template <class T>
std::optional<T> find_querelement(const NaryOp<T>& op, std::span<const T> universe, const T& x) {
    for (const T& candidate : universe) {
        if (is_querelement_of(op, candidate, x)) return candidate;
    }
    return std::nullopt;
}

struct CheckMode {
    enum class Kind { exhaustive, sampled };

    Kind kind = Kind::exhaustive;
    std::uint64_t samples = 1000;
    std::uint64_t seed = 0;
    std::uint64_t budget = 1'000'000;
    // Exhaustive requests above budget fall back to `samples` seeded draws.
    bool degrade_to_sampling = true;

    static CheckMode exhaustive(std::uint64_t budget = 1'000'000) {
        CheckMode m;
        m.kind = Kind::exhaustive;
        m.budget = budget;
        return m;
    }
    static CheckMode sampled(std::uint64_t samples, std::uint64_t seed) {
        CheckMode m;
        m.kind = Kind::sampled;
        m.samples = samples;
        m.seed = seed;
        return m;
    }
};

struct Counterexample {
    std::vector<std::string> word;
    std::string lhs;
    std::string rhs;
    std::string detail;
};

struct AxiomReport {
    enum class Status { holds, fails };

    std::string structure;
    std::string axiom;
    CheckMode::Kind mode = CheckMode::Kind::exhaustive;
    std::uint64_t seed = 0;
    std::uint64_t cases = 0;
    Status status = Status::holds;
    std::string note;
    std::optional<Counterexample> counterexample;

    bool holds() const { return status == Status::holds; }
    std::string to_text() const;
    nlohmann::json to_json() const;
};

// A report plus the typed offending word, so callers can re-evaluate a failure
// independently of the engine.
template <class T>
struct Checked {
    AxiomReport report;
    std::vector<T> witness;
};

template <class T>
struct Domain {
    std::vector<T> universe;                 // enumerable part, may be empty
    std::function<T(Rng&)> sampler;          // optional; defaults to drawing from universe
    std::function<std::string(const T&)> render;

    T draw(Rng& rng) const {
        if (sampler) return sampler(rng);
        if (universe.empty()) throw DomainError("domain has neither a universe nor a sampler");
        return universe[rng.index(universe.size())];
    }
    std::string show(const T& x) const { return render ? render(x) : std::string("?"); }
};

struct Violation {
    std::string lhs;
    std::string rhs;
    std::string detail;
};

namespace detail {

inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (__builtin_mul_overflow(out, base, &out)) return std::nullopt;
    }
    return out;
}

// Runs `pred` over words of `length` letters and stops at the first violation
// in enumeration order.
template <class T, class Pred>
Checked<T> run_words(const std::string& structure, const std::string& axiom, const Domain<T>& domain,
                     std::size_t length, const CheckMode& mode, Pred pred) {
    Checked<T> out;
    AxiomReport& report = out.report;
    report.structure = structure;
    report.axiom = axiom;

    auto record = [&](const std::vector<T>& word, const Violation& v) {
        report.status = AxiomReport::Status::fails;
        Counterexample ce;
        for (const T& letter : word) ce.word.push_back(domain.show(letter));
        ce.lhs = v.lhs;
        ce.rhs = v.rhs;
        ce.detail = v.detail;
        report.counterexample = std::move(ce);
        out.witness = word;
    };

    auto run_sampled = [&](std::uint64_t samples, std::uint64_t seed) {
        report.mode = CheckMode::Kind::sampled;
        report.seed = seed;
        Rng rng(seed);
        std::vector<T> word;
        for (std::uint64_t i = 0; i < samples; ++i) {
            word.clear();
            for (std::size_t j = 0; j < length; ++j) word.push_back(domain.draw(rng));
            ++report.cases;
            if (auto v = pred(std::span<const T>(word))) {
                record(word, *v);
                return;
            }
        }
    };

    if (mode.kind == CheckMode::Kind::sampled) {
        run_sampled(mode.samples, mode.seed);
        return out;
    }

    const auto total = checked_pow(domain.universe.size(), length);
    if (domain.universe.empty() || !total || *total > mode.budget) {
        if (!mode.degrade_to_sampling) {
            throw BudgetExceeded("exhaustive " + axiom + " check on " + structure + " needs " +
                                 (total ? std::to_string(*total) : std::string("more than 2^64")) +
                                 " words, budget is " + std::to_string(mode.budget));
        }
        report.note = "exhaustive request exceeds budget " + std::to_string(mode.budget) +
                      "; degraded to " + std::to_string(mode.samples) + " seeded samples";
        run_sampled(mode.samples, mode.seed);
        return out;
    }

    report.mode = CheckMode::Kind::exhaustive;
    const std::size_t u = domain.universe.size();
    std::vector<std::size_t> digits(length, 0);
    std::vector<T> word(length, domain.universe.front());
    for (std::uint64_t c = 0; c < *total; ++c) {
        for (std::size_t j = 0; j < length; ++j) word[j] = domain.universe[digits[j]];
        ++report.cases;
        if (auto v = pred(std::span<const T>(word))) {
            record(word, *v);
            return out;
        }
        for (std::size_t j = length; j-- > 0;) {
            if (++digits[j] < u) break;
            digits[j] = 0;
        }
    }
    return out;
}

template <class T>
std::vector<T> splice(std::span<const T> word, std::size_t pos, std::size_t len, const T& replacement) {
    std::vector<T> out(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(pos));
    out.push_back(replacement);
    out.insert(out.end(), word.begin() + static_cast<std::ptrdiff_t>(pos + len), word.end());
    return out;
}

}  // namespace detail

// Total associativity: op[x, op[y], z] agrees for all n placements of the
// inner operation on words of length 2n-1.
template <class T>
Checked<T> check_total_associativity(const std::string& structure, const NaryOp<T>& op,
                                     const Domain<T>& domain, const CheckMode& mode) {
    const std::size_t n = op.arity;
    return detail::run_words(
        structure, "total-associativity", domain, 2 * n - 1, mode,
        [&](std::span<const T> word) -> std::optional<Violation> {
            std::optional<T> first;
            for (std::size_t p = 0; p < n; ++p) {
                const T inner = op(std::vector<T>(word.begin() + static_cast<std::ptrdiff_t>(p),
                                                  word.begin() + static_cast<std::ptrdiff_t>(p + n)));
                const T value = op(detail::splice(word, p, n, inner));
                if (!first) {
                    first = value;
                } else if (!(value == *first)) {
                    return Violation{domain.show(*first), domain.show(value),
                                        "inner product at position 0 vs position " + std::to_string(p)};
                }
            }
            return std::nullopt;
        });
}

// Distributivity of mul over add in every slot:
// mul[y.., add[x1..xm], ..y] = add[mul[y.., x1, ..y], ..., mul[y.., xm, ..y]].
template <class T>
Checked<T> check_distributivity(const std::string& structure, const NaryOp<T>& add, const NaryOp<T>& mul,
                                const Domain<T>& domain, const CheckMode& mode) {
    const std::size_t m = add.arity;
    const std::size_t n = mul.arity;
    return detail::run_words(
        structure, "distributivity", domain, m + n - 1, mode,
        [&](std::span<const T> word) -> std::optional<Violation> {
            const std::vector<T> xs(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(m));
            const std::vector<T> ys(word.begin() + static_cast<std::ptrdiff_t>(m), word.end());
            auto with_slot = [&](std::size_t slot, const T& x) {
                std::vector<T> polyad(ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(slot));
                polyad.push_back(x);
                polyad.insert(polyad.end(), ys.begin() + static_cast<std::ptrdiff_t>(slot), ys.end());
                return polyad;
            };
            for (std::size_t slot = 0; slot < n; ++slot) {
                const T lhs = mul(with_slot(slot, add(xs)));
                std::vector<T> parts;
                for (const T& x : xs) parts.push_back(mul(with_slot(slot, x)));
                const T rhs = add(parts);
                if (!(lhs == rhs)) {
                    return Violation{domain.show(lhs), domain.show(rhs), "addition in multiplication slot " + std::to_string(slot)};
                }
            }
            return std::nullopt;
        });
}

// Invariance of op under every permutation of its operands.
template <class T>
Checked<T> check_commutativity(const std::string& structure, const std::string& axiom, const NaryOp<T>& op,
                               const Domain<T>& domain, const CheckMode& mode) {
    const std::size_t n = op.arity;
    return detail::run_words(
        structure, axiom, domain, n, mode, [&](std::span<const T> word) -> std::optional<Violation> {
            const T base = op(std::vector<T>(word.begin(), word.end()));
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), std::size_t{0});
            while (std::next_permutation(perm.begin(), perm.end())) {
                std::vector<T> permuted;
                for (std::size_t i : perm) permuted.push_back(word[i]);
                const T value = op(permuted);
                if (!(value == base)) return Violation{domain.show(base), domain.show(value), "operands permuted"};
            }
            return std::nullopt;
        });
}

// Zero law: z is neutral for add at every slot and absorbing for mul at every slot.
template <class T>
Checked<T> check_zero_law(const std::string& structure, const std::optional<NaryOp<T>>& add,
                          const NaryOp<T>& mul, const T& z, const Domain<T>& domain, const CheckMode& mode) {
    const std::size_t n = mul.arity;
    return detail::run_words(
        structure, "zero-law", domain, std::max<std::size_t>(1, n - 1), mode,
        [&](std::span<const T> word) -> std::optional<Violation> {
            if (add) {
                for (std::size_t slot = 0; slot < add->arity; ++slot) {
                    const T value = (*add)(polyad_with(word[0], slot, z, add->arity));
                    if (!(value == word[0])) {
                        return Violation{domain.show(value), domain.show(word[0]), "additive neutrality at slot " + std::to_string(slot)};
                    }
                }
            }
            for (std::size_t slot = 0; slot < n; ++slot) {
                std::vector<T> polyad(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(n - 1));
                polyad.insert(polyad.begin() + static_cast<std::ptrdiff_t>(slot), z);
                const T value = mul(polyad);
                if (!(value == z)) {
                    return Violation{domain.show(value), domain.show(z), "multiplicative absorption at slot " + std::to_string(slot)};
                }
            }
            return std::nullopt;
        });
}

// Identity law: op[x, e, ..., e] = x with x at the slots selected by `placement`.
template <class T>
Checked<T> check_identity_law(const std::string& structure, const NaryOp<T>& op, const T& e,
                              const Domain<T>& domain, const CheckMode& mode,
                              Placement placement = Placement::outer_positions) {
    auto checked = detail::run_words(
        structure, "identity-law", domain, 1, mode, [&](std::span<const T> word) -> std::optional<Violation> {
            for (std::size_t slot : placement_slots(placement, op.arity)) {
                const T value = op(polyad_with(word[0], slot, e, op.arity));
                if (!(value == word[0])) {
                    return Violation{domain.show(value), domain.show(word[0]), "subject at slot " + std::to_string(slot)};
                }
            }
            return std::nullopt;
        });
    checked.report.note = placement == Placement::outer_positions ? "subject tested at first and last slot"
                                                                  : "subject tested at every slot";
    return checked;
}

// Querelement law: op[qbar, x, ..., x] = x with qbar at every slot, for each x
// of the domain, where qbar = quer(x). A missing querelement is a failure.
template <class T>
Checked<T> check_quer_law(const std::string& structure, const NaryOp<T>& op,
                          const std::function<std::optional<T>(const T&)>& quer, const Domain<T>& domain,
                          const CheckMode& mode) {
    return detail::run_words(
        structure, "quer-law", domain, 1, mode, [&](std::span<const T> word) -> std::optional<Violation> {
            const T& x = word[0];
            const auto qbar = quer(x);
            if (!qbar) return Violation{domain.show(x), domain.show(x), "no querelement"};
            for (std::size_t slot = 0; slot < op.arity; ++slot) {
                const T value = op(polyad_with(*qbar, slot, x, op.arity));
                if (!(value == x)) {
                    return Violation{domain.show(value), domain.show(x), "querelement " + domain.show(*qbar) + " at slot " +
                                                      std::to_string(slot)};
                }
            }
            return std::nullopt;
        });
}

// A structure bundle for check_axiom: multiplication, optional addition and a domain.
template <class T>
struct Structure {
    std::string label;
    std::optional<NaryOp<T>> add;
    NaryOp<T> mul;
    Domain<T> domain;
};

enum class Axiom { zero_law, identity_law, quer_law, additive_commutativity };

// Subjects: zero_law {z}; identity_law {e}; quer_law {g1, qbar1, g2, qbar2, ...};
// additive_commutativity none.
template <class T>
Checked<T> check_axiom(const Structure<T>& s, Axiom axiom, std::span<const T> subjects, const CheckMode& mode) {
    auto need = [&](std::size_t count) {
        if (subjects.size() < count) throw ArityMismatch("axiom subjects", count, subjects.size());
    };
    switch (axiom) {
    case Axiom::zero_law:
        need(1);
        return check_zero_law(s.label, s.add, s.mul, subjects[0], s.domain, mode);
    case Axiom::identity_law:
        need(1);
        return check_identity_law(s.label, s.mul, subjects[0], s.domain, mode);
    case Axiom::quer_law: {
        if (subjects.empty() || subjects.size() % 2 != 0) {
            throw DomainError("quer-law subjects must be (element, querelement) pairs");
        }
        Domain<T> pairs_domain;
        pairs_domain.render = s.domain.render;
        for (std::size_t i = 0; i < subjects.size(); i += 2) pairs_domain.universe.push_back(subjects[i]);
        const std::function<std::optional<T>(const T&)> lookup = [&](const T& x) -> std::optional<T> {
            for (std::size_t i = 0; i < subjects.size(); i += 2) {
                if (subjects[i] == x) return subjects[i + 1];
            }
            return std::nullopt;
        };
        return check_quer_law(s.label, s.mul, lookup, pairs_domain, CheckMode::exhaustive(mode.budget));
    }
    case Axiom::additive_commutativity:
        if (!s.add) throw DomainError(s.label + " has no addition");
        return check_commutativity(s.label, "additive-commutativity", *s.add, s.domain, mode);
    }
    throw DomainError("unknown axiom");
}

// Evidence that an n-ary operation is nonderived: the would-be binary product
// (oracle returns nullopt when the product leaves the universe). Holds iff at
// least one pair leaves; the note records how many do.
template <class T>
Checked<T> check_closure_nonderived(const std::string& structure, std::span<const T> universe,
                                    const std::function<std::optional<T>(const T&, const T&)>& binary_oracle,
                                    const std::function<std::string(const T&)>& render) {
    Checked<T> out;
    AxiomReport& report = out.report;
    report.structure = structure;
    report.axiom = "nonderived-closure";
    report.mode = CheckMode::Kind::exhaustive;
    std::uint64_t leaving = 0;
    std::optional<std::pair<std::size_t, std::size_t>> first_inside;
    for (std::size_t i = 0; i < universe.size(); ++i) {
        for (std::size_t j = 0; j < universe.size(); ++j) {
            ++report.cases;
            if (binary_oracle(universe[i], universe[j])) {
                if (!first_inside) first_inside = {i, j};
            } else {
                ++leaving;
            }
        }
    }
    report.note = std::to_string(leaving) + " of " + std::to_string(report.cases) +
                  " binary products leave the universe";
    if (leaving == 0 && first_inside) {
        report.status = AxiomReport::Status::fails;
        const T& a = universe[first_inside->first];
        const T& b = universe[first_inside->second];
        const T product = *binary_oracle(a, b);
        report.counterexample = Counterexample{{render(a), render(b)}, render(product), render(product),
                                               "binary product stays inside the universe"};
        out.witness = {a, b};
    }
    return out;
}

}  // namespace pgr
