#include <doctest.h>

#include <set>
#include <vector>

#include "rfg/rng.hpp"

using namespace rfg;

TEST_CASE("philox4x32-10 known answers") {
  // Random123 kat_vectors
  const PhiloxCounter zero = philox4x32_10({0, 0, 0, 0}, {0, 0});
  CHECK(zero == PhiloxCounter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});

  const PhiloxCounter ones =
      philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff});
  CHECK(ones == PhiloxCounter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});

  const PhiloxCounter pi_digits =
      philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0});
  CHECK(pi_digits == PhiloxCounter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("streams are deterministic and distinct") {
  Stream a(42, 0), b(42, 0), c(42, 1), d(43, 0);
  std::vector<std::uint64_t> xa, xb, xc, xd;
  for (int i = 0; i < 100; ++i) {
    xa.push_back(a.next_u64());
    xb.push_back(b.next_u64());
    xc.push_back(c.next_u64());
    xd.push_back(d.next_u64());
  }
  CHECK(xa == xb);
  CHECK(xa != xc);
  CHECK(xa != xd);
  CHECK(a.position() == 100);
  CHECK(a.seed() == StreamSeed{42, 0});

  std::set<std::uint64_t> seen(xa.begin(), xa.end());
  seen.insert(xc.begin(), xc.end());
  CHECK(seen.size() == 200);
}

TEST_CASE("uniforms") {
  Stream s(7, 3);
  double sum = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = s.uniform();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
    sum += u;
  }
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.005));
  Stream t(7, 4);
  for (int i = 0; i < 1000; ++i) CHECK(t.uniform_positive() > 0.0);
}
