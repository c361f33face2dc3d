#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace latkit {

// Base for all domain errors. `code` is a stable machine-readable tag and
// `witness` holds the offending elements (meaning depends on the code), so a
// caller can reconstruct the failure without parsing the message.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, std::string msg, std::vector<long long> witness = {})
        : std::runtime_error(std::move(msg)), code_(std::move(code)), witness_(std::move(witness)) {}

    const std::string& code() const { return code_; }
    const std::vector<long long>& witness() const { return witness_; }

private:
    std::string code_;
    std::vector<long long> witness_;
};

struct CycleDetected : DomainError {
    CycleDetected(int x, int y)
        : DomainError("CycleDetected", "cover closure violates antisymmetry between " +
                      std::to_string(x) + " and " + std::to_string(y), {x, y}) {}
};

struct NotComparable : DomainError {
    NotComparable(int x, int y)
        : DomainError("NotComparable", "elements " + std::to_string(x) + " and " +
                      std::to_string(y) + " are not comparable", {x, y}) {}
};

struct NotAnAntichain : DomainError {
    NotAnAntichain(int x, int y)
        : DomainError("NotAnAntichain", "elements " + std::to_string(x) + " and " +
                      std::to_string(y) + " are comparable", {x, y}) {}
};

// which = 0 for join, 1 for meet
struct NotALattice : DomainError {
    NotALattice(int x, int y, int which)
        : DomainError("NotALattice", std::string("pair (") + std::to_string(x) + "," +
                      std::to_string(y) + ") has no unique " + (which ? "greatest lower" : "least upper") +
                      " bound", {x, y, which}) {}
};

struct NotJoinIrreducible : DomainError {
    explicit NotJoinIrreducible(int j)
        : DomainError("NotJoinIrreducible", "element " + std::to_string(j) +
                      " is not join-irreducible", {j}) {}
};

struct NotMeetIrreducible : DomainError {
    explicit NotMeetIrreducible(int m)
        : DomainError("NotMeetIrreducible", "element " + std::to_string(m) +
                      " is not meet-irreducible", {m}) {}
};

struct NotJoinSemidistributive : DomainError {
    NotJoinSemidistributive(int x, int y, int z)
        : DomainError("NotJoinSemidistributive", "SD-join fails at (" + std::to_string(x) + "," +
                      std::to_string(y) + "," + std::to_string(z) + ")", {x, y, z}) {}
};

struct PreconditionViolated : DomainError {
    explicit PreconditionViolated(std::string msg)
        : DomainError("PreconditionViolated", std::move(msg)) {}
};

struct NotAFace : DomainError {
    explicit NotAFace(std::string msg) : DomainError("NotAFace", std::move(msg)) {}
};

struct NotOrderConvex : DomainError {
    NotOrderConvex(int x, int z, int y)
        : DomainError("NotOrderConvex", "element " + std::to_string(z) + " lies strictly between " +
                      std::to_string(x) + " and " + std::to_string(y) + " but is outside the set",
                      {x, z, y}) {}
};

struct NotACongruence : DomainError {
    NotACongruence(std::string axiom, std::vector<long long> witness)
        : DomainError("NotACongruence", "congruence axiom violated: " + axiom, std::move(witness)),
          axiom(std::move(axiom)) {}
    std::string axiom;
};

struct GuardExceeded : DomainError {
    explicit GuardExceeded(std::string msg) : DomainError("GuardExceeded", std::move(msg)) {}
};

struct TooLarge : DomainError {
    explicit TooLarge(std::string msg) : DomainError("TooLarge", std::move(msg)) {}
};

struct NotPEO : DomainError {
    explicit NotPEO(int index)
        : DomainError("NotPEO", "vertex at position " + std::to_string(index) +
                      " violates the perfect elimination ordering", {index}) {}
};

struct NeighborhoodNotNested : DomainError {
    explicit NeighborhoodNotNested(int index)
        : DomainError("NeighborhoodNotNested", "open neighborhood of vertex " + std::to_string(index + 1) +
                      " is not contained in the closed neighborhood of vertex " + std::to_string(index),
                      {index}) {}
};

struct NotFound : DomainError {
    explicit NotFound(int max_steps)
        : DomainError("NotFound", "no realization found within " + std::to_string(max_steps) +
                      " doubling steps", {max_steps}) {}
};

}  // namespace latkit
