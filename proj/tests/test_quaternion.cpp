#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "horadam/quaternion.hpp"

using horadam::Quaternion;
using horadam::Rational;

namespace {

Quaternion<Rational> quat(long long w, long long x, long long y, long long z) {
    return {Rational(w), Rational(x), Rational(y), Rational(z)};
}

Quaternion<Rational> random_quat(std::mt19937& rng) {
    auto comp = [&] {
        return Rational(static_cast<long long>(rng() % 199) - 99,
                        static_cast<long long>(rng() % 20) + 1);
    };
    return {comp(), comp(), comp(), comp()};
}

}  // namespace

TEST_CASE("quaternion: hamilton product unit relations") {
    Quaternion<Rational> i = quat(0, 1, 0, 0);
    Quaternion<Rational> j = quat(0, 0, 1, 0);
    Quaternion<Rational> k = quat(0, 0, 0, 1);
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(i * i == quat(-1, 0, 0, 0));
    CHECK(j * j == quat(-1, 0, 0, 0));
    CHECK(k * k == quat(-1, 0, 0, 0));
    CHECK(i * j * k == quat(-1, 0, 0, 0));
}

TEST_CASE("quaternion: hamilton product") {
    Quaternion<Rational> q = quat(3, -1, 4, 2);
    CHECK(quat(1, 0, 0, 0) * q == q);
    CHECK(quat(0, 1, 1, 2) * quat(1, 2, 3, 5) == quat(-15, 0, 0, 3));
}

TEST_CASE("quaternion: conjugation") {
    CHECK(conj(quat(1, 2, 3, 4)) == quat(1, -2, -3, -4));
    Quaternion<Rational> q = quat(2, -7, 1, 5);
    CHECK(conj(conj(q)) == q);
    Quaternion<Rational> p = quat(0, 1, 1, 2);
    Quaternion<Rational> r = quat(1, 2, 3, 5);
    CHECK(conj(p * r) == conj(r) * conj(p));
}

TEST_CASE("quaternion: norm") {
    CHECK(norm(quat(0, 1, 1, 2)) == Rational(6));
    CHECK(norm(quat(0, 0, 0, 0)) == Rational(0));
    CHECK(norm(quat(0, 1, 2, 5)) == Rational(30));
}

TEST_CASE("quaternion: inverse") {
    CHECK(inverse(quat(1, 0, 0, 0)) == quat(1, 0, 0, 0));
    CHECK(inverse(quat(0, 1, 0, 0)) == quat(0, -1, 0, 0));
    Quaternion<Rational> expected{Rational(1, 4), Rational(-1, 4), Rational(-1, 4),
                                  Rational(-1, 4)};
    CHECK(inverse(quat(1, 1, 1, 1)) == expected);
    CHECK(quat(1, 1, 1, 1) * inverse(quat(1, 1, 1, 1)) == quat(1, 0, 0, 0));
    CHECK_THROWS_AS(inverse(quat(0, 0, 0, 0)), horadam::NonInvertible);
}

TEST_CASE("quaternion: algebra properties on random quaternions") {
    std::mt19937 rng(101);
    for (int i = 0; i < 150; ++i) {
        Quaternion<Rational> p = random_quat(rng);
        Quaternion<Rational> q = random_quat(rng);
        Quaternion<Rational> r = random_quat(rng);
        CHECK(norm(p * q) == norm(p) * norm(q));
        CHECK(conj(p * q) == conj(q) * conj(p));
        CHECK((p * q) * r == p * (q * r));
        Quaternion<Rational> pc = p * conj(p);
        CHECK(pc == Quaternion<Rational>{norm(p), Rational(0), Rational(0), Rational(0)});
    }
}

TEST_CASE("quaternion: non-commutativity witness") {
    Quaternion<Rational> i = quat(0, 1, 0, 0);
    Quaternion<Rational> j = quat(0, 0, 1, 0);
    CHECK(i * j != j * i);
}

TEST_CASE("quaternion: scalar ring mismatch") {
    using horadam::QuadExt;
    auto embed5 = [](long long v) { return QuadExt::embed(Rational(v), 5); };
    auto embed7 = [](long long v) { return QuadExt::embed(Rational(v), 7); };
    Quaternion<QuadExt> a{QuadExt(Rational(1), Rational(1), 5), embed5(0), embed5(0), embed5(1)};
    Quaternion<QuadExt> b{QuadExt(Rational(1), Rational(1), 7), embed7(0), embed7(0), embed7(1)};
    CHECK_THROWS_AS(a * b, horadam::DiscriminantMismatch);
    CHECK_THROWS_AS(a + b, horadam::DiscriminantMismatch);
}

TEST_CASE("quaternion: text form") {
    Quaternion<Rational> q{Rational(1, 2), Rational(-3), Rational(0), Rational(5, 7)};
    CHECK(q.to_string() == "(1/2, -3, 0, 5/7)");
}
