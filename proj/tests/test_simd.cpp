#include <doctest.h>

#include <cstring>
#include <random>
#include <vector>

#include "dotconf/counting.hpp"
#include "dotconf/dot_index.hpp"
#include "dotconf/random.hpp"
#include "dotconf/simd/kernels.hpp"

using namespace dotconf;
namespace simd = dotconf::simd;

namespace {

std::vector<const simd::KernelTable*> available_tables() {
  std::vector<const simd::KernelTable*> out{&simd::generic_kernels()};
  if (const auto* t = simd::avx2_kernels()) out.push_back(t);
  if (const auto* t = simd::neon_kernels()) out.push_back(t);
  return out;
}

// restores runtime selection even when a check fails
struct KernelOverride {
  explicit KernelOverride(const simd::KernelTable* t) { simd::override_kernels(t); }
  ~KernelOverride() { simd::override_kernels(nullptr); }
};

}  // namespace

TEST_CASE("every kernel table agrees with the generic one") {
  std::mt19937_64 rng(23);
  // values bounded so a row sum of up to 4 products stays inside int64
  const std::int64_t bound = std::int64_t{1} << 30;
  std::uniform_int_distribution<std::int64_t> small(-9, 9);
  std::uniform_int_distribution<std::int64_t> wide(-bound, bound);
  for (const auto* table : available_tables()) {
    CAPTURE(table->name);
    for (std::size_t dim : {2u, 3u, 4u}) {
      for (std::size_t count : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 9u, 31u, 64u, 257u}) {
        for (bool use_wide : {false, true}) {
          auto draw = [&] { return use_wide ? wide(rng) : small(rng); };
          std::vector<std::int64_t> pin(dim), coords(dim * count);
          for (auto& v : pin) v = draw();
          for (auto& v : coords) v = draw();
          if (use_wide && count > 0) coords[0] = simd::kLaneLimit / 2;
          std::vector<std::int64_t> want(count), got(count);
          simd::generic::dot_row(pin.data(), dim, coords.data(), count, count, want.data());
          table->dot_row(pin.data(), dim, coords.data(), count, count, got.data());
          CHECK(want == got);
          for (std::size_t j = 0; j < count; ++j) {
            std::int64_t ref = 0;
            for (std::size_t c = 0; c < dim; ++c) ref += pin[c] * coords[c * count + j];
            REQUIRE(want[j] == ref);
          }
          const std::int64_t target = count ? want[count / 2] : 0;
          std::size_t ref = 0;
          for (auto v : want) ref += v == target;
          CHECK(table->count_equal(want.data(), count, target) == ref);
          CHECK(table->count_equal(want.data(), count, target + 1) ==
                simd::generic::count_equal(want.data(), count, target + 1));
        }
      }
    }
  }
}

TEST_CASE("kernels honor a stride larger than the count") {
  for (const auto* table : available_tables()) {
    CAPTURE(table->name);
    const std::int64_t pin[2] = {3, -2};
    // stride 7, only the first 5 columns are used
    std::vector<std::int64_t> coords = {1, 2, 3, 4, 5, 99, 99, 10, 20, 30, 40, 50, 99, 99};
    std::vector<std::int64_t> out(5);
    table->dot_row(pin, 2, coords.data(), 7, 5, out.data());
    CHECK(out == std::vector<std::int64_t>{-17, -34, -51, -68, -85});
  }
}

TEST_CASE("override pins the active table and nullptr restores selection") {
  const char* before = simd::active_kernels().name;
  {
    KernelOverride pin(&simd::generic_kernels());
    CHECK(std::strcmp(simd::active_kernels().name, "generic") == 0);
  }
  CHECK(std::strcmp(simd::active_kernels().name, before) == 0);
}

TEST_CASE("counts do not depend on the kernel table") {
  const PointSet E = random_point_set(70, 2, 15, 3);
  const PointSet F = random_point_set(40, 3, 6, 4);
  for (const auto* table : available_tables()) {
    CAPTURE(table->name);
    std::size_t distinct_e = 0, distinct_f = 0;
    std::vector<std::size_t> pins;
    {
      KernelOverride pin(&simd::generic_kernels());
      distinct_e = distinct_dot_products(E).distinct;
      distinct_f = distinct_dot_products(F).distinct;
      pins = pinned_counts(E);
    }
    KernelOverride pin(table);
    const DotProductIndex idx(E, ExecPolicy{});
    CHECK(idx.backend() == table->name);
    CHECK(distinct_dot_products(E).distinct == distinct_e);
    CHECK(distinct_dot_products(F).distinct == distinct_f);
    CHECK(pinned_counts(E) == pins);
  }
}

TEST_CASE("coordinates outside the lane range fall back to exact arithmetic") {
  std::vector<Point> pts;
  for (long i = 1; i <= 6; ++i) pts.push_back(Point{ExactScalar(BigInt(BigInt(i) * BigInt("10000000000"))), ExactScalar(i)});
  const PointSet E(2, pts);
  const DotProductIndex idx(E, ExecPolicy{});
  CHECK(idx.backend() == "exact");
  std::set<ExactScalar> want;
  for (std::size_t i = 0; i < E.size(); ++i) {
    for (std::size_t j = 0; j < E.size(); ++j) {
      if (i != j) want.insert(dot(E[i], E[j]));
    }
  }
  CHECK(distinct_dot_products(E).distinct == want.size());
}
