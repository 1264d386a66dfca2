#pragma once

// Exact intersection theory on Hirzebruch surfaces F_e and their iterated
// blow-ups. Divisor classes are integer coordinate vectors over the basis
// [C0, F, E1..Er], where C0 is the negative section (C0^2 = -e), F a fiber
// of the ruling, and Ei the exceptional curves of the blow-ups. All values
// are immutable after construction; all arithmetic is 64-bit and
// overflow-checked.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace canon8 {

using Int = std::int64_t;

// Overflow-checked arithmetic; throws std::overflow_error.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

class SurfaceModel;

struct DivisorClass {
    std::vector<Int> coords;  // [C0, F, E1..Er]
    std::uint32_t surface_id = 0;

    Int section_coeff() const { return coords[0]; }
    Int fiber_coeff() const { return coords[1]; }
    Int exceptional_coeff(std::size_t i) const { return coords[1 + i]; }  // i is 1-based
    bool is_zero() const;

    DivisorClass& operator+=(const DivisorClass& rhs);
    DivisorClass& operator-=(const DivisorClass& rhs);
    DivisorClass& operator*=(Int s);

    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(DivisorClass a, Int s) { return a *= s; }
    friend DivisorClass operator*(Int s, DivisorClass a) { return a *= s; }
    friend DivisorClass operator-(DivisorClass a) { return a *= -1; }
    friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
        return a.surface_id == b.surface_id && a.coords == b.coords;
    }
};

// Rendered as e.g. "2*C0 + 4*F - E1"; "0" for the zero class.
std::string to_string(const DivisorClass& d);

struct BlowUpRecord {
    std::string label;
    std::vector<Int> multiplicities;  // the k-vector that created the point; may be empty
};

// A base Hirzebruch surface plus an ordered list of blown-up points. Owns
// the intersection form and the canonical class. Copies denote the same
// surface (the identity token is preserved).
class SurfaceModel {
public:
    explicit SurfaceModel(Int e = 1);

    Int hirzebruch_e() const { return e_; }
    std::size_t blowup_count() const { return blowups_.size(); }
    std::size_t basis_size() const { return 2 + blowups_.size(); }
    std::uint32_t id() const { return id_; }
    std::uint32_t parent_id() const { return parent_id_; }
    const std::vector<BlowUpRecord>& blowups() const { return blowups_; }

    bool owns(const DivisorClass& d) const;

    DivisorClass zero() const;
    DivisorClass section() const;                   // C0
    DivisorClass fiber() const;                     // F
    DivisorClass exceptional(std::size_t i) const;  // Ei, 1-based
    DivisorClass make_class(Int a, Int b, std::vector<Int> e_coeffs = {}) const;

    // -2*C0 - (e+2)*F + sum Ei
    DivisorClass canonical_class() const;

    // Extends the basis by one exceptional curve; the result is a new surface.
    SurfaceModel blow_up(BlowUpRecord rec = {}) const;

    // Total transform of a class from the parent surface (zero new coordinate).
    DivisorClass embed(const DivisorClass& parent_class) const;

private:
    Int e_;
    std::vector<BlowUpRecord> blowups_;
    std::uint32_t id_;
    std::uint32_t parent_id_;
};

// Symmetric bilinear intersection form. Throws std::domain_error if A or B
// does not belong to S.
Int intersect(const SurfaceModel& s, const DivisorClass& a, const DivisorClass& b);

// Section count of D = a*C0 + b*F - sum mi*Ei with all mi >= 0, under the
// assumption that the imposed point conditions are independent:
// 0 for a < 0, otherwise max(0, sum_{k=0..a} max(0, b - k*e + 1) - sum mi(mi+1)/2).
// A positive Ei coefficient makes the effective part ambiguous and throws.
Int h0(const SurfaceModel& s, const DivisorClass& d);

// Arithmetic genus via adjunction, 1 + C.(C+K)/2.
Int adjunction_genus(const SurfaceModel& s, const DivisorClass& c);

struct NefResult {
    bool ok = false;
    std::string witness;  // failing test curve when !ok
    explicit operator bool() const { return ok; }
};

// D.T >= 0 against the generator test curves C0, F, each Ei, each F-Ei,
// together with D.D > 0. The witness names the first failing test.
NefResult is_nef_and_big(const SurfaceModel& s, const DivisorClass& d);

}  // namespace canon8
