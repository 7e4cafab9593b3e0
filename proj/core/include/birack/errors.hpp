#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace birack {

// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A birack axiom failed during validation. `axiom` names the failed
// condition ("invertibility", "i", "ii", "iii"); `witness` holds the
// offending elements (1-indexed).
class AxiomViolation : public Error {
public:
    AxiomViolation(std::string axiom, std::vector<int> witness, const std::string& detail);
    const std::string& axiom() const { return axiom_; }
    const std::vector<int>& witness() const { return witness_; }

private:
    std::string axiom_;
    std::vector<int> witness_;
};

class MalformedMatrix : public Error {
public:
    explicit MalformedMatrix(const std::string& what) : Error(what) {}
};

// The sideways map is not defined on all of X x X.
class SidewaysUndefined : public Error {
public:
    SidewaysUndefined(int x, int y);
    std::pair<int, int> witness() const { return {x_, y_}; }

private:
    int x_, y_;
};

class SidewaysNotInvertible : public Error {
public:
    SidewaysNotInvertible();
};

class NonCommuting : public Error {
public:
    NonCommuting() : Error("sigma and tau do not commute") {}
};

class BadParameters : public Error {
public:
    explicit BadParameters(const std::string& what) : Error(what) {}
};

// A dynamical cocycle axiom failed. `axiom` is "i".."v".
class CocycleViolation : public Error {
public:
    CocycleViolation(std::string axiom, std::vector<int> witness, const std::string& detail);
    const std::string& axiom() const { return axiom_; }
    const std::vector<int>& witness() const { return witness_; }

private:
    std::string axiom_;
    std::vector<int> witness_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& detail);
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class InconsistentCrossing : public Error {
public:
    InconsistentCrossing(int id, const std::string& detail);
    int id() const { return id_; }

private:
    int id_;
};

class UnknownName : public Error {
public:
    explicit UnknownName(const std::string& name);
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

class CapExceeded : public Error {
public:
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

}  // namespace birack
