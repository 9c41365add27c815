#include <sstream>

#include "rolelogic/syntax.hpp"

namespace rolelogic {

namespace {

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

// ---- role ----

bool role_atomic(role::Kind k) {
  using role::Kind;
  switch (k) {
    case Kind::Unary:
    case Kind::Binary:
    case Kind::Id:
    case Kind::True:
    case Kind::False:
    case Kind::Emp:
    case Kind::Box:
    case Kind::Acyclic:
    case Kind::FieldComplement:
    case Kind::Edges:
      return true;
    default:
      return false;
  }
}

bool role_binary(role::Kind k) {
  using role::Kind;
  return k == Kind::And || k == Kind::Or || k == Kind::Implies || k == Kind::Spatial;
}

bool role_record(role::Kind k) {
  using role::Kind;
  return k == Kind::Field || k == Kind::Multifield || k == Kind::Slot || k == Kind::Multislot;
}

std::string role_str(const role::Formula& f);

std::string role_operand(const role::Formula& f) {
  if (role_atomic(f.kind())) return role_str(f);
  return "(" + role_str(f) + ")";
}

std::string role_child(const role::Formula& c, role::Kind parent, bool left) {
  if (role_binary(c.kind())) {
    bool bare = c.kind() == parent &&
                (parent == role::Kind::Implies ? !left : left);
    return bare ? role_str(c) : "(" + role_str(c) + ")";
  }
  if (role_record(c.kind())) return "(" + role_str(c) + ")";
  return role_str(c);
}

std::string bound_str(role::Bound b) {
  switch (b.op) {
    case role::BoundOp::Eq: return "(=" + std::to_string(b.k) + ")";
    case role::BoundOp::Le: return "(<=" + std::to_string(b.k) + ")";
    case role::BoundOp::Ge: return "(>=" + std::to_string(b.k) + ")";
  }
  return "";
}

bool default_bound(role::Bound b) { return b.op == role::BoundOp::Eq && b.k == 1; }

std::string role_str(const role::Formula& f) {
  using role::Kind;
  switch (f.kind()) {
    case Kind::Unary:
    case Kind::Binary:
      return f.name();
    case Kind::Id: return "id";
    case Kind::True: return "true";
    case Kind::False: return "false";
    case Kind::Emp: return "emp";
    case Kind::Edges: return "edges";
    case Kind::FieldComplement: return "fc(" + f.name() + ")";
    case Kind::Acyclic: return "acyclic(" + join(f.names(), ", ") + ")";
    case Kind::Box: return "[" + role_str(f.body()) + "]";
    case Kind::Not: return "!" + role_operand(f.body());
    case Kind::Inv: return "inv " + role_operand(f.body());
    case Kind::Shift: return "sh " + role_operand(f.body());
    case Kind::CardGeq: return "card>=" + std::to_string(f.k()) + " " + role_operand(f.body());
    case Kind::CardLeq: return "card<=" + std::to_string(f.k()) + " " + role_operand(f.body());
    case Kind::CardEq: return "card=" + std::to_string(f.k()) + " " + role_operand(f.body());
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Spatial: {
      const char* op = f.kind() == Kind::And ? " & "
                       : f.kind() == Kind::Or ? " | "
                       : f.kind() == Kind::Implies ? " => "
                                                   : " * ";
      return role_child(f.lhs(), f.kind(), true) + op + role_child(f.rhs(), f.kind(), false);
    }
    case Kind::Field: {
      std::string arrow = default_bound(f.bound()) ? " -> " : " ->" + bound_str(f.bound()) + " ";
      return f.name() + arrow + role_operand(f.body());
    }
    case Kind::Multifield: return f.name() + " ->* " + role_operand(f.body());
    case Kind::Slot: {
      std::string arrow = default_bound(f.bound()) ? " <- " : " <-" + bound_str(f.bound()) + " ";
      return role_operand(f.body()) + arrow + f.name();
    }
    case Kind::Multislot: return role_operand(f.body()) + " <-* " + f.name();
  }
  return "?";
}

// ---- fo ----

bool fo_binary(fo::Kind k) {
  using fo::Kind;
  return k == Kind::And || k == Kind::Or || k == Kind::Implies || k == Kind::Iff ||
         k == Kind::Spatial;
}

bool fo_prefix(fo::Kind k) {
  return fo::is_quantifier(k) || fo::is_relation_quantifier(k);
}

std::string fo_str(const fo::Formula& f);

std::string fo_child(const fo::Formula& c, fo::Kind parent, bool left) {
  if (fo_binary(c.kind())) {
    bool bare = c.kind() == parent && parent != fo::Kind::Iff &&
                (parent == fo::Kind::Implies ? !left : left);
    return bare ? fo_str(c) : "(" + fo_str(c) + ")";
  }
  if (fo_prefix(c.kind())) return "(" + fo_str(c) + ")";
  return fo_str(c);
}

std::string fo_str(const fo::Formula& f) {
  using fo::Kind;
  switch (f.kind()) {
    case Kind::Pred: return f.name() + "(" + join(f.vars(), ",") + ")";
    case Kind::Eq: return f.vars()[0] + " = " + f.vars()[1];
    case Kind::True: return "true";
    case Kind::False: return "false";
    case Kind::Acyclic: return "acyclic(" + join(f.vars(), ", ") + ")";
    case Kind::Not: {
      const fo::Formula& b = f.body();
      if (b.kind() == Kind::Eq) return b.vars()[0] + " != " + b.vars()[1];
      if (fo_binary(b.kind()) || fo_prefix(b.kind()) || b.kind() == Kind::Not)
        return "!(" + fo_str(b) + ")";
      return "!" + fo_str(b);
    }
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
    case Kind::Iff:
    case Kind::Spatial: {
      const char* op = f.kind() == Kind::And       ? " & "
                       : f.kind() == Kind::Or      ? " | "
                       : f.kind() == Kind::Implies ? " => "
                       : f.kind() == Kind::Iff     ? " <=> "
                                                   : " * ";
      return fo_child(f.lhs(), f.kind(), true) + op + fo_child(f.rhs(), f.kind(), false);
    }
    case Kind::ExistsGeq:
      return "exists>=" + std::to_string(f.k()) + " " + f.var() + ". " + fo_str(f.body());
    case Kind::ExistsEq:
      return "exists=" + std::to_string(f.k()) + " " + f.var() + ". " + fo_str(f.body());
    case Kind::ExistsLeq:
      return "exists<=" + std::to_string(f.k()) + " " + f.var() + ". " + fo_str(f.body());
    case Kind::Forall: return "forall " + f.var() + ". " + fo_str(f.body());
    case Kind::ExistsRel:
      return "exists2 " + f.name() + "/" + std::to_string(f.k()) + ". " + fo_str(f.body());
    case Kind::ForallRel:
      return "forall2 " + f.name() + "/" + std::to_string(f.k()) + ". " + fo_str(f.body());
    case Kind::Lfp:
      return "(lfp " + f.name() + "(" + join(f.vars(), ",") + "). " + fo_str(f.body()) + ")(" +
             join(f.args(), ",") + ")";
  }
  return "?";
}

}  // namespace

std::string print(const role::Formula& f) { return role_str(f); }
std::string print(const fo::Formula& f) { return fo_str(f); }
std::string print(const AnyFormula& f) {
  return std::visit([](const auto& g) { return print(g); }, f);
}

std::string print_signature(const Signature& sig) {
  std::string out = "sig {";
  if (!sig.unaries().empty()) out += " unary " + join(sig.unaries(), ", ") + ";";
  if (!sig.binaries().empty()) out += " binary " + join(sig.binaries(), ", ") + ";";
  if (!sig.nonsplittable().empty()) out += " nonsplit " + join(sig.nonsplittable(), ", ") + ";";
  out += " }";
  return out;
}

}  // namespace rolelogic
