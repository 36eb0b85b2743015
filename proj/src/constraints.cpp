#include "lexiplan/constraints.hpp"

#include "lexiplan/model.hpp"

namespace lexiplan {

const char* constraint_type_token(ConstraintType t) {
  switch (t) {
    case ConstraintType::Always:
      return "always";
    case ConstraintType::Sometime:
      return "sometime";
    case ConstraintType::AtMostOnce:
      return "at-most-once";
    case ConstraintType::SometimeBefore:
      return "sometime-before";
    case ConstraintType::SometimeAfter:
      return "sometime-after";
  }
  return "";
}

TrajectoryConstraint::TrajectoryConstraint(ConstraintType t, Formula phi,
                                           Formula psi)
    : type_(t), phi_(to_nnf(phi)), psi_(to_nnf(psi)) {}

TrajectoryConstraint TrajectoryConstraint::always(Formula phi) {
  return {ConstraintType::Always, std::move(phi), Formula::truth()};
}

TrajectoryConstraint TrajectoryConstraint::sometime(Formula phi) {
  return {ConstraintType::Sometime, std::move(phi), Formula::truth()};
}

TrajectoryConstraint TrajectoryConstraint::at_most_once(Formula phi) {
  return {ConstraintType::AtMostOnce, std::move(phi), Formula::truth()};
}

TrajectoryConstraint TrajectoryConstraint::sometime_before(Formula phi,
                                                           Formula psi) {
  return {ConstraintType::SometimeBefore, std::move(phi), std::move(psi)};
}

TrajectoryConstraint TrajectoryConstraint::sometime_after(Formula phi,
                                                          Formula psi) {
  return {ConstraintType::SometimeAfter, std::move(phi), std::move(psi)};
}

std::string TrajectoryConstraint::text() const {
  std::string out = "(";
  out += constraint_type_token(type_);
  out += ' ';
  out += phi_.text();
  if (binary()) {
    out += ' ';
    out += psi_.text();
  }
  out += ')';
  return out;
}

std::size_t MonitorState::hash() const {
  std::size_t h = static_cast<std::size_t>(type);
  h = h * 31 + (ok ? 1 : 0);
  h = h * 31 + (seen ? 1 : 0);
  h = h * 31 + static_cast<std::size_t>(phase);
  h = h * 31 + (violated ? 1 : 0);
  h = h * 31 + (seen_psi ? 1 : 0);
  h = h * 31 + (pending ? 1 : 0);
  return h;
}

bool MonitorState::dead() const {
  switch (type) {
    case ConstraintType::Always:
      return !ok;
    case ConstraintType::AtMostOnce:
    case ConstraintType::SometimeBefore:
      return violated;
    default:
      return false;  // Sometime/SometimeAfter can still be satisfied later
  }
}

MonitorState init_monitor(const TrajectoryConstraint& q, const State& s0) {
  MonitorState m;
  m.type = q.type();
  bool phi = holds(s0, q.phi());
  switch (q.type()) {
    case ConstraintType::Always:
      m.ok = phi;
      break;
    case ConstraintType::Sometime:
      m.seen = phi;
      break;
    case ConstraintType::AtMostOnce:
      m.phase = phi ? MonitorState::AmoPhase::Open
                    : MonitorState::AmoPhase::Never;
      break;
    case ConstraintType::SometimeBefore:
      // No state precedes s0, so phi at s0 is an immediate violation.
      m.violated = phi;
      m.seen_psi = holds(s0, q.psi());
      break;
    case ConstraintType::SometimeAfter:
      m.pending = phi && !holds(s0, q.psi());
      break;
  }
  return m;
}

MonitorState step_monitor(const TrajectoryConstraint& q, const MonitorState& m,
                          const State& s) {
  MonitorState out = m;
  bool phi = holds(s, q.phi());
  switch (q.type()) {
    case ConstraintType::Always:
      out.ok = m.ok && phi;
      break;
    case ConstraintType::Sometime:
      out.seen = m.seen || phi;
      break;
    case ConstraintType::AtMostOnce:
      switch (m.phase) {
        case MonitorState::AmoPhase::Never:
          if (phi) out.phase = MonitorState::AmoPhase::Open;
          break;
        case MonitorState::AmoPhase::Open:
          if (!phi) out.phase = MonitorState::AmoPhase::Closed;
          break;
        case MonitorState::AmoPhase::Closed:
          if (phi) out.violated = true;  // second interval opens
          break;
      }
      break;
    case ConstraintType::SometimeBefore:
      // phi checked before folding psi in: the witness must be strictly
      // earlier.
      if (phi && !m.seen_psi) out.violated = true;
      out.seen_psi = m.seen_psi || holds(s, q.psi());
      break;
    case ConstraintType::SometimeAfter: {
      bool psi = holds(s, q.psi());
      if (psi)
        out.pending = false;
      else if (phi)
        out.pending = true;
      break;
    }
  }
  return out;
}

bool accepting(const MonitorState& m) {
  switch (m.type) {
    case ConstraintType::Always:
      return m.ok;
    case ConstraintType::Sometime:
      return m.seen;
    case ConstraintType::AtMostOnce:
      return !m.violated;
    case ConstraintType::SometimeBefore:
      return !m.violated;
    case ConstraintType::SometimeAfter:
      return !m.pending;
  }
  return false;
}

bool check_sequence(const TrajectoryConstraint& q,
                    const std::vector<State>& sigma) {
  switch (q.type()) {
    case ConstraintType::Always:
      for (const State& s : sigma)
        if (!holds(s, q.phi())) return false;
      return true;
    case ConstraintType::Sometime:
      for (const State& s : sigma)
        if (holds(s, q.phi())) return true;
      return false;
    case ConstraintType::AtMostOnce: {
      int intervals = 0;
      bool prev = false;
      for (const State& s : sigma) {
        bool cur = holds(s, q.phi());
        if (cur && !prev) ++intervals;
        prev = cur;
      }
      return intervals <= 1;
    }
    case ConstraintType::SometimeBefore:
      for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (!holds(sigma[i], q.phi())) continue;
        bool witness = false;
        for (std::size_t j = 0; j < i; ++j)
          if (holds(sigma[j], q.psi())) {
            witness = true;
            break;
          }
        if (!witness) return false;
      }
      return true;
    case ConstraintType::SometimeAfter:
      for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (!holds(sigma[i], q.phi())) continue;
        bool witness = false;
        for (std::size_t j = i; j < sigma.size(); ++j)
          if (holds(sigma[j], q.psi())) {
            witness = true;
            break;
          }
        if (!witness) return false;
      }
      return true;
  }
  return false;
}

}  // namespace lexiplan
