#include "birack/errors.hpp"

#include <sstream>

namespace birack {

namespace {

std::string tuple_text(const std::vector<int>& w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ',';
        os << w[i];
    }
    os << ')';
    return os.str();
}

}  // namespace

AxiomViolation::AxiomViolation(std::string axiom, std::vector<int> witness,
                               const std::string& detail)
    : Error("birack axiom (" + axiom + ") fails at " + tuple_text(witness) +
            (detail.empty() ? "" : ": " + detail)),
      axiom_(std::move(axiom)),
      witness_(std::move(witness)) {}

SidewaysUndefined::SidewaysUndefined(int x, int y)
    : Error("sideways map undefined: (B1(x,y), x) misses the pair (" + std::to_string(x) + "," +
            std::to_string(y) + ")"),
      x_(x),
      y_(y) {}

SidewaysNotInvertible::SidewaysNotInvertible()
    : Error("sideways map is not invertible") {}

CocycleViolation::CocycleViolation(std::string axiom, std::vector<int> witness,
                                   const std::string& detail)
    : Error("cocycle axiom (" + axiom + ") fails at " + tuple_text(witness) +
            (detail.empty() ? "" : ": " + detail)),
      axiom_(std::move(axiom)),
      witness_(std::move(witness)) {}

ParseError::ParseError(std::size_t position, const std::string& detail)
    : Error("parse error at position " + std::to_string(position) + ": " + detail),
      position_(position) {}

InconsistentCrossing::InconsistentCrossing(int id, const std::string& detail)
    : Error("inconsistent crossing " + std::to_string(id) + ": " + detail), id_(id) {}

UnknownName::UnknownName(const std::string& name)
    : Error("unknown catalog name: " + name), name_(name) {}

}  // namespace birack
