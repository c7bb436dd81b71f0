#pragma once

#include <stdexcept>
#include <string>

namespace latticelab {

struct LatticeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CycleDetected : LatticeError {
    CycleDetected() : LatticeError("cover relation contains a directed cycle") {}
};

struct IndexOutOfRange : LatticeError {
    explicit IndexOutOfRange(int i)
        : LatticeError("element index out of range: " + std::to_string(i)), index(i) {}
    int index;
};

struct NotALattice : LatticeError {
    NotALattice(int x_, int y_)
        : LatticeError("pair (" + std::to_string(x_) + "," + std::to_string(y_) +
                       ") has no unique meet/join"),
          x(x_), y(y_) {}
    int x, y; // witness pair
};

struct NotComparable : LatticeError {
    NotComparable(int u_, int v_)
        : LatticeError("elements " + std::to_string(u_) + " and " + std::to_string(v_) +
                       " are not comparable"),
          u(u_), v(v_) {}
    int u, v;
};

struct SizeLimitExceeded : LatticeError {
    explicit SizeLimitExceeded(const std::string& what) : LatticeError(what) {}
};

struct CapExceeded : LatticeError {
    explicit CapExceeded(long long cap_)
        : LatticeError("enumeration exceeded cap " + std::to_string(cap_)), cap(cap_) {}
    long long cap;
};

struct NotJoinIrreducible : LatticeError {
    explicit NotJoinIrreducible(int e)
        : LatticeError("element " + std::to_string(e) + " is not join-irreducible"), element(e) {}
    int element;
};

struct NotMeetIrreducible : LatticeError {
    explicit NotMeetIrreducible(int e)
        : LatticeError("element " + std::to_string(e) + " is not meet-irreducible"), element(e) {}
    int element;
};

struct NotPaired : LatticeError {
    NotPaired() : LatticeError("lattice has no pairing") {}
};

struct NotUniquelyPaired : LatticeError {
    explicit NotUniquelyPaired(int count_)
        : LatticeError("lattice has " + std::to_string(count_) + " pairings"), count(count_) {}
    int count;
};

struct NotOverlapping : LatticeError {
    NotOverlapping(int lo, int hi, int candidates)
        : LatticeError("cover (" + std::to_string(lo) + "," + std::to_string(hi) + ") has " +
                       std::to_string(candidates) + " label candidates"),
          cover_lo(lo), cover_hi(hi), candidate_count(candidates) {}
    int cover_lo, cover_hi, candidate_count;
};

struct NotSemidistrim : LatticeError {
    explicit NotSemidistrim(const std::string& reason)
        : LatticeError("lattice is not semidistrim: " + reason) {}
};

struct NotMeetSemidistributive : LatticeError {
    NotMeetSemidistributive() : LatticeError("lattice is not meet-semidistributive") {}
};

struct MultipleMaximal : LatticeError {
    explicit MultipleMaximal(int x_)
        : LatticeError("witness set for element " + std::to_string(x_) +
                       " has several maximal elements"),
          x(x_) {}
    int x;
};

struct InternalMismatch : LatticeError {
    explicit InternalMismatch(const std::string& what) : LatticeError(what) {}
};

struct NotADownSet : LatticeError {
    explicit NotADownSet(int e)
        : LatticeError("set is not down-closed below element " + std::to_string(e)), element(e) {}
    int element;
};

struct UnknownId : LatticeError {
    explicit UnknownId(const std::string& id) : LatticeError("unknown id: " + id) {}
};

} // namespace latticelab
