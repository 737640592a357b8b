#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "elimination.hpp"

namespace ginv {

enum class EquationKind { sylvester, two_sided, stein };

inline std::string_view kind_name(EquationKind k) {
    switch (k) {
    case EquationKind::sylvester: return "sylvester";
    case EquationKind::two_sided: return "two-sided";
    case EquationKind::stein: return "stein";
    }
    return "?";
}

struct GenSpec {
    std::size_t n = 3;
    std::size_t rank = 2;
    std::uint64_t seed = 0;
    long entry_bound = 5;  // generator cores draw integers in [-bound, bound]
};

template <Field T>
struct SolvableInstance {
    EquationKind kind{};
    Matrix<T> a, b, c;
    Matrix<T> x;  // known X (sylvester, two-sided)
    Matrix<T> y;  // known Y (two-sided, stein)
};

// Seeded random instances. Everything is built in exact arithmetic and then
// converted, so a given seed yields the same instance in either mode up to
// rounding. Draws use raw mt19937_64 output, which is portable across
// standard libraries.
template <Field T>
class InstanceGenerator {
public:
    explicit InstanceGenerator(std::uint64_t seed, long entry_bound = 5) : engine_(seed), bound_(entry_bound) {}

    long uniform(long lo, long hi) {
        return lo + static_cast<long>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    std::size_t uniform_size(std::size_t lo, std::size_t hi) {
        return static_cast<std::size_t>(uniform(static_cast<long>(lo), static_cast<long>(hi)));
    }

    Matrix<T> integer_matrix(std::size_t rows, std::size_t cols) { return convert<T>(exact_integer(rows, cols)); }

    Matrix<T> invertible(std::size_t n) { return convert<T>(exact_invertible(n).first); }

    // S diag(K, 0) S^-1 with K (rank x rank) and S (n x n) invertible, which
    // has index at most one.
    Matrix<T> group_invertible(std::size_t n, std::size_t rank) { return convert<T>(exact_group_invertible(n, rank)); }

    Matrix<T> group_invertible(std::size_t n) { return group_invertible(n, uniform_size(0, n)); }

    // Solvable by construction: the solution is drawn first and C defined from it.
    // For stein, A + I and B + I are the group-invertible matrices.
    SolvableInstance<T> solvable(EquationKind kind, std::size_t n, std::size_t m) {
        const auto rank_a = uniform_size(0, n);
        return solvable(kind, n, m, rank_a, uniform_size(0, m));
    }

    SolvableInstance<T> solvable(EquationKind kind, std::size_t n, std::size_t m, std::size_t rank_a,
                                 std::size_t rank_b) {
        SolvableInstance<Rational> s;
        s.kind = kind;
        s.a = exact_group_invertible(n, rank_a);
        s.b = exact_group_invertible(m, rank_b);
        switch (kind) {
        case EquationKind::sylvester:
            s.x = exact_integer(n, m);
            s.c = s.a * s.x - s.x * s.b;
            break;
        case EquationKind::two_sided:
            s.x = exact_integer(n, m);
            s.y = exact_integer(n, m);
            s.c = s.a * s.x - s.y * s.b;
            break;
        case EquationKind::stein:
            s.a -= Matrix<Rational>::identity(n);
            s.b -= Matrix<Rational>::identity(m);
            s.y = exact_integer(n, m);
            s.c = s.a * s.y * s.b - s.y;
            break;
        }
        return {kind, convert<T>(s.a), convert<T>(s.b), convert<T>(s.c), convert<T>(s.x), convert<T>(s.y)};
    }

private:
    Matrix<Rational> exact_integer(std::size_t rows, std::size_t cols) {
        Matrix<Rational> m(rows, cols);
        for (auto& v : m.data()) v = Rational(uniform(-bound_, bound_));
        return m;
    }

    std::pair<Matrix<Rational>, Matrix<Rational>> exact_invertible(std::size_t n) {
        for (;;) {
            auto m = exact_integer(n, n);
            if (auto inv = inverse(m)) return {std::move(m), std::move(*inv)};
        }
    }

    Matrix<Rational> exact_group_invertible(std::size_t n, std::size_t rank) {
        if (rank > n) throw dimension_error("rank exceeds dimension");
        Matrix<Rational> core(n, n);
        core.set_block(0, 0, exact_invertible(rank).first);
        const auto [s, s_inv] = exact_invertible(n);
        return s * core * s_inv;
    }

    std::mt19937_64 engine_;
    long bound_;
};

inline Matrix<Rational> gen_group_invertible(const GenSpec& spec) {
    return InstanceGenerator<Rational>(spec.seed, spec.entry_bound).group_invertible(spec.n, spec.rank);
}

inline SolvableInstance<Rational> gen_solvable_instance(EquationKind kind, const GenSpec& spec) {
    InstanceGenerator<Rational> gen(spec.seed, spec.entry_bound);
    return gen.solvable(kind, spec.n, spec.n, spec.rank, spec.rank);
}

} // namespace ginv
