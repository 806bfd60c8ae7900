#pragma once

#include <stdexcept>
#include <string>

namespace sptolemy {

enum class errc {
  division_by_zero,
  zero_polynomial,
  rank_mismatch,
  not_invertible,
  not_osp,
  not_unimodular,
  degenerate_pair,
  not_generic,
  syntax_error,
  gluing_not_involutive,
  not_ordered,
  slot_out_of_range,
  sigma_not_cocycle,
  residual_nonzero,
  choice_invalid,
  weights_missing,
  not_composable,
  not_closed,
  not_adjacent,
  ordering_obstruction,
  degenerate_transport,
  singular_jacobian,
  no_convergence,
  usage_error,
};

inline const char* errc_name(errc k) {
  switch (k) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::rank_mismatch: return "RankMismatch";
    case errc::not_invertible: return "NotInvertible";
    case errc::not_osp: return "NotOSp";
    case errc::not_unimodular: return "NotUnimodular";
    case errc::degenerate_pair: return "DegeneratePair";
    case errc::not_generic: return "NotGeneric";
    case errc::syntax_error: return "SyntaxError";
    case errc::gluing_not_involutive: return "GluingNotInvolutive";
    case errc::not_ordered: return "NotOrdered";
    case errc::slot_out_of_range: return "SlotOutOfRange";
    case errc::sigma_not_cocycle: return "SigmaNotCocycle";
    case errc::residual_nonzero: return "ResidualNonzero";
    case errc::choice_invalid: return "ChoiceInvalid";
    case errc::weights_missing: return "WeightsMissing";
    case errc::not_composable: return "NotComposable";
    case errc::not_closed: return "NotClosed";
    case errc::not_adjacent: return "NotAdjacent";
    case errc::ordering_obstruction: return "OrderingObstruction";
    case errc::degenerate_transport: return "DegenerateTransport";
    case errc::singular_jacobian: return "SingularJacobian";
    case errc::no_convergence: return "NoConvergence";
    case errc::usage_error: return "UsageError";
  }
  return "Error";
}

class error : public std::runtime_error {
 public:
  error(errc k, const std::string& what)
      : std::runtime_error(std::string(errc_name(k)) + ": " + what), kind_(k) {}
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

[[noreturn]] inline void fail(errc k, const std::string& what) {
  throw error(k, what);
}

}  // namespace sptolemy
