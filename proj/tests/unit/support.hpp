#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "xhopf/error.hpp"
#include "xhopf/examples.hpp"

namespace xhopf::testing {

inline const FieldSpec kQ = FieldSpec::rational();
inline const FieldSpec kGF5 = FieldSpec::prime(5);
inline const FieldSpec kGF7 = FieldSpec::prime(7);

inline Scalar q(long num, long den = 1) { return Scalar::fraction(kQ, num, den); }
inline Scalar s(FieldSpec f, long v) { return Scalar(f, v); }

/// Seeded generators for the property tests. Every test names its seed so
/// that a failure reproduces exactly.
class Gen {
  public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    Scalar scalar(FieldSpec f) {
        if (f.is_rational()) {
            const long num = static_cast<long>(integer(-9, 9));
            const long den = static_cast<long>(integer(1, 6));
            return Scalar::fraction(f, num, den);
        }
        return Scalar(f, static_cast<long>(integer(0, static_cast<std::int64_t>(f.characteristic) - 1)));
    }

    Scalar nonzero(FieldSpec f) {
        for (;;) {
            Scalar x = scalar(f);
            if (!x.is_zero())
                return x;
        }
    }

    Matrix matrix(FieldSpec f, std::size_t rows, std::size_t cols) {
        Matrix m(f, rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                m(i, j) = scalar(f);
        return m;
    }

    /// A matrix of the given rank, built as a product of random factors.
    Matrix matrix_of_rank(FieldSpec f, std::size_t rows, std::size_t cols, std::size_t r) {
        for (;;) {
            Matrix m = mat_mul(matrix(f, rows, r), matrix(f, r, cols));
            if (rank(m) == r)
                return m;
        }
    }

    Vector vector(FieldSpec f, std::size_t n) {
        Vector v;
        for (std::size_t i = 0; i < n; ++i)
            v.push_back(scalar(f));
        return v;
    }

  private:
    std::mt19937_64 rng_;
};

/// Prints the first failing checks of a report.
inline ::testing::AssertionResult Passes(const Report& r) {
    if (r.ok())
        return ::testing::AssertionSuccess();
    return ::testing::AssertionFailure() << r.to_text();
}

inline const Check* failing(const Report& r) {
    for (const auto& c : r.checks())
        if (c.status() == CheckStatus::fail)
            return &c;
    return nullptr;
}

struct Named {
    std::string name;
    HopfXiCoalgebra a;
};

/// Every construction over every standard crossed module, plus k^omega[Z/2].
inline std::vector<Named> example_universe(FieldSpec f) {
    const char* cm_names[] = {"1->Z2", "id Z2", "Z2->1", "A3 in S3"};
    std::vector<Named> out;
    const auto cms = examples::standard_crossed_modules();
    for (std::size_t i = 0; i < cms.size(); ++i) {
        const std::string tag = std::string(" over ") + cm_names[i] + " " + f.name();
        out.push_back({"trivial" + tag, mk_trivial(f, cms[i])});
        out.push_back({"sign twisted" + tag, examples::sign_twisted(f, cms[i])});
        out.push_back({"pi coalgebra" + tag, mk_from_pi_coalgebra(cms[i], examples::constant_pi_coalgebra(f, cms[i]))});
    }
    out.push_back({"bicharacter Z2 " + f.name(), examples::bicharacter_z2(f)});
    return out;
}

template <class F>
ErrorCode error_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::InvalidArgument;
}

} // namespace xhopf::testing
