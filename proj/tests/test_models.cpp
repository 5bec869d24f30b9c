#include <doctest.h>

#include "kleinvcy/models.hpp"
#include "kleinvcy/plane_action.hpp"

using namespace kleinvcy;

namespace {

Rational q(long p, long d = 1) { return make_rational(p, d); }
CyclicSubgroup sub(long n, long m) { return canonicalize({n, m}); }

}  // namespace

TEST_CASE("action on the vertices k_n") {
  CHECK(act_on_kn({1, 0}, 3) == 5);
  CHECK(act_on_kn({1, 1}, 3) == -1);
  CHECK(act_on_kn({0, 0}, 3) == 3);
  // The stabilizer of k_n is <(n,1)>.
  for (long n = -5; n <= 5; ++n) {
    for (long t1 = -5; t1 <= 5; ++t1) {
      for (long t2 = -5; t2 <= 5; ++t2) {
        CHECK((act_on_kn({t1, t2}, n) == n) == contains(sub(n, 1), {t1, t2}));
      }
    }
  }
}

TEST_CASE("projection and line actions") {
  CHECK(map_p({q(3), q(2, 5)}) == q(2, 5));
  CHECK(model3b_action({5, 0}, q(7, 2)) == q(7, 2));
  CHECK(model3b_action({5, 3}, q(7, 2)) == q(13, 2));
}

TEST_CASE("map_f") {
  CHECK(map_f(sub(1, 2), {q(0), q(2)}) == q(-1));
  CHECK(map_f(sub(1, 2), {q(1), q(0)}) == q(1));
  CHECK(map_f_phi(sub(1, 2), {1, 0}) == 1);
  CHECK(map_f_phi(sub(1, 2), {1, 2}) == 0);
  CHECK_THROWS_AS(map_f_phi(sub(1, 2), {0, 1}), PreconditionError);
  CHECK_THROWS_AS(map_f(sub(1, 0), {q(0), q(0)}), PreconditionError);
  CHECK_THROWS_AS(map_f(sub(2, 4), {q(0), q(0)}), PreconditionError);

  const MapFTransfer odd = map_f_transfer(sub(1, 2), {0, 1});
  CHECK(odd.sign == -1);
  CHECK(odd.target == sub(-1, 2));
  for (long t = -2; t <= 2; ++t) {
    const PlanePoint x{q(t, 3), q(1, 2)};
    CHECK(map_f(sub(1, 2), act_point({0, 1}, x)) == odd.offset + odd.sign * map_f(odd.target, x));
  }
}

TEST_CASE("R-orbit representatives") {
  CHECK(r_orbit_representatives(1) == std::vector<CyclicSubgroup>{sub(1, 2)});
  CHECK(r_orbit_representatives(2) == std::vector<CyclicSubgroup>{sub(1, 2), sub(1, 4), sub(2, 2)});
  std::size_t last = 0;
  for (long b = 1; b <= 8; ++b) {
    const std::size_t count = r_orbit_representatives(b).size();
    CHECK(count > last);
    last = count;
  }
}

TEST_CASE("pushout report") {
  for (long b = 1; b <= 5; ++b) {
    const ModelDescriptor d = pushout_report(b);
    CHECK(d.kind == ModelKind::PushoutModel);
    CHECK(d.count(PieceKind::HLine) == 1);
    CHECK(d.count(PieceKind::KJoin) == 1);
    CHECK(d.count(PieceKind::BasePlane) == 1);
    CHECK(d.count(PieceKind::RLine) == r_orbit_representatives(b).size());
  }
  CHECK_THROWS_AS(pushout_report(0), PreconditionError);
}

TEST_CASE("join report") {
  const ModelDescriptor d = join_model_report(1);
  CHECK(d.kind == ModelKind::JoinModel);
  // Slopes -1, 0, 1 and the vertical family.
  CHECK(d.count(PieceKind::SlopeFamily) == 4);
}
