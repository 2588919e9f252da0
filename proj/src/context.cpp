#include "pglgraph/context.hpp"

#include "pglgraph/error.hpp"
#include "pglgraph/numtheory.hpp"

namespace pglgraph {

std::shared_ptr<const Context> Context::make(unsigned p, unsigned e) {
  auto ctx = std::make_shared<Context>();
  ctx->field = std::make_shared<const FieldTable>(FieldTable::build(p, e));
  const elem delta = find_nonsquare(*ctx->field);
  ctx->ext = std::make_shared<const ExtFieldTable>(ExtFieldTable::build(ctx->field, delta));
  ctx->chars = std::make_shared<const Characters>(ctx->field, ctx->ext);
  ctx->group = std::make_shared<const Pgl2>(ctx->field, delta);
  ctx->mod_k = std::make_shared<const CosetSpace>(ctx->group, SubgroupKind::K);
  ctx->mod_u = std::make_shared<const CosetSpace>(ctx->group, SubgroupKind::U);
  ctx->mod_a = std::make_shared<const CosetSpace>(ctx->group, SubgroupKind::A);
  return ctx;
}

std::shared_ptr<const Context> Context::make_q(std::uint32_t q) {
  const auto pe = prime_power(q);
  if (!pe) throw error(errc::not_prime, std::to_string(q) + " is not a prime power");
  return make(pe->first, pe->second);
}

const CosetSpace& Context::space(SubgroupKind kind) const {
  switch (kind) {
    case SubgroupKind::K: return *mod_k;
    case SubgroupKind::U: return *mod_u;
    case SubgroupKind::A: return *mod_a;
  }
  throw error(errc::invalid_param, "unknown subgroup");
}

}  // namespace pglgraph
