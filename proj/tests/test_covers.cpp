#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "polyfield/covers.hpp"

using namespace polyfield;

namespace {

std::shared_ptr<CoverContext> shared_ctx() {
  static std::shared_ptr<CoverContext> ctx = std::make_shared<CoverContext>();
  return ctx;
}

}  // namespace

TEST_CASE("base group and characters") {
  auto ctx = shared_ctx();
  CHECK(ctx->base().order() == 24261120);
  CHECK(ctx->r().size() == 6);
  // chi and chi_w are multiplicative characters with values in {1, 2}
  const auto& r = ctx->r();
  FpMat g = r[0].mul(r[1]).mul(r[3]);
  FpMat h = r[2].mul(r[4]);
  PrimeField f(3);
  CHECK(ctx->chi(g.mul(h)) == f.mul(ctx->chi(g), ctx->chi(h)));
  CHECK(ctx->chi_w(g.mul(h)) == f.mul(ctx->chi_w(g), ctx->chi_w(h)));
  CHECK(ctx->chi(FpMat::identity(3, 6)) == 1);
  // the twist is involutory and lands in the base field
  CHECK(ctx->twist(ctx->twist(g)) == g);
  // fp_det of a reflection is -1
  CHECK(fp_det(r[0]) == 2);
}

TEST_CASE("Lambda cover structure") {
  LambdaGroup lambda(shared_ctx());
  CHECK(lambda.order() == 72783360);
  CHECK(lambda.order() == 3ull * 24261120);
  // generators are involutions
  for (int i = 0; i < 6; ++i) {
    LambdaElt rho = lambda.rho()[std::size_t(i)];
    CHECK(lambda.is_identity(lambda.mul(rho, rho)));
    CHECK(lambda.period(rho) == 2);
  }
  // inverse and associativity spot checks
  LambdaElt a = lambda.mul(lambda.rho()[0], lambda.rho()[1]);
  LambdaElt b = lambda.mul(lambda.rho()[2], lambda.rho()[4]);
  CHECK(lambda.is_identity(lambda.mul(a, lambda.inv(a))));
  CHECK(lambda.mul(lambda.mul(a, b), a) == lambda.mul(a, lambda.mul(b, a)));
  // pow agrees with iterated mul
  LambdaElt acc = lambda.identity();
  for (int k = 0; k <= 5; ++k) {
    CHECK(lambda.pow(a, std::uint64_t(k)) == acc);
    acc = lambda.mul(acc, a);
  }
}

TEST_CASE("Lambda relations") {
  LambdaGroup lambda(shared_ctx());
  CoverCheck c = verify_lambda(lambda);
  CHECK(c.ok);
  for (const auto& line : c.lines) CAPTURE(line);
}

TEST_CASE("tau-system relations inside Lambda") {
  LambdaGroup lambda(shared_ctx());
  CoverCheck c = verify_tau(lambda);
  CHECK(c.ok);
}

TEST_CASE("Sigma cover structure and relations") {
  SigmaGroup sigma(shared_ctx());
  CHECK(sigma.order() == 9ull * 24261120);
  for (int i = 0; i < 6; ++i) {
    SigmaElt s = sigma.sigma()[std::size_t(i)];
    CHECK(sigma.is_identity(sigma.mul(s, s)));
  }
  CoverCheck c = verify_sigma(sigma);
  CHECK(c.ok);
}

TEST_CASE("covering diagram with distinguished central quotients") {
  SigmaGroup sigma(shared_ctx());
  LambdaGroup lambda(shared_ctx());
  CoverDiagramReport r = covering_diagram(sigma, lambda);
  CHECK(r.ok);
  CHECK(!r.lines.empty());
  bool saw_kernel = false, saw_duality = false;
  for (const auto& line : r.lines) {
    if (line.find("kernels") != std::string::npos) saw_kernel = true;
    if (line.find("not isomorphic over the duality") != std::string::npos)
      saw_duality = true;
  }
  CHECK(saw_kernel);
  CHECK(saw_duality);
}

TEST_CASE("no proper subgroup collapse for the derived generator systems") {
  CollapseReport r = subgroup_collapse_check(3);
  CHECK(r.ok);
  CHECK(r.base_order == 24261120);
  CHECK(r.h_order == r.base_order);
  CHECK(r.k_order == r.base_order);
}
