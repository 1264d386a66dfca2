#include "canon8/picard.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>

namespace canon8 {

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in sub");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
    return r;
}

namespace {

std::uint32_t next_surface_id() {
    static std::atomic<std::uint32_t> counter{1};
    return counter.fetch_add(1);
}

void require_same_surface(const DivisorClass& a, const DivisorClass& b) {
    if (a.surface_id != b.surface_id)
        throw std::domain_error("divisor classes belong to different surfaces");
}

}  // namespace

bool DivisorClass::is_zero() const {
    for (Int c : coords)
        if (c != 0) return false;
    return true;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& rhs) {
    require_same_surface(*this, rhs);
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = checked_add(coords[i], rhs.coords[i]);
    return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& rhs) {
    require_same_surface(*this, rhs);
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = checked_sub(coords[i], rhs.coords[i]);
    return *this;
}

DivisorClass& DivisorClass::operator*=(Int s) {
    for (Int& c : coords) c = checked_mul(c, s);
    return *this;
}

std::string to_string(const DivisorClass& d) {
    std::ostringstream out;
    bool first = true;
    auto term = [&](Int c, const std::string& name) {
        if (c == 0) return;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        Int mag = c < 0 ? -c : c;
        if (mag != 1) out << mag << "*";
        out << name;
    };
    term(d.coords[0], "C0");
    term(d.coords[1], "F");
    for (std::size_t i = 2; i < d.coords.size(); ++i) term(d.coords[i], "E" + std::to_string(i - 1));
    if (first) return "0";
    return out.str();
}

SurfaceModel::SurfaceModel(Int e) : e_(e), id_(next_surface_id()), parent_id_(0) {
    if (e < 0) throw std::invalid_argument("Hirzebruch parameter must be nonnegative");
}

bool SurfaceModel::owns(const DivisorClass& d) const {
    return d.surface_id == id_ && d.coords.size() == basis_size();
}

DivisorClass SurfaceModel::zero() const {
    return DivisorClass{std::vector<Int>(basis_size(), 0), id_};
}

DivisorClass SurfaceModel::section() const {
    DivisorClass d = zero();
    d.coords[0] = 1;
    return d;
}

DivisorClass SurfaceModel::fiber() const {
    DivisorClass d = zero();
    d.coords[1] = 1;
    return d;
}

DivisorClass SurfaceModel::exceptional(std::size_t i) const {
    if (i == 0 || i > blowups_.size()) throw std::out_of_range("no such exceptional curve");
    DivisorClass d = zero();
    d.coords[1 + i] = 1;
    return d;
}

DivisorClass SurfaceModel::make_class(Int a, Int b, std::vector<Int> e_coeffs) const {
    if (e_coeffs.size() > blowups_.size()) throw std::invalid_argument("too many exceptional coefficients");
    DivisorClass d = zero();
    d.coords[0] = a;
    d.coords[1] = b;
    for (std::size_t i = 0; i < e_coeffs.size(); ++i) d.coords[2 + i] = e_coeffs[i];
    return d;
}

DivisorClass SurfaceModel::canonical_class() const {
    DivisorClass k = zero();
    k.coords[0] = -2;
    k.coords[1] = -(e_ + 2);
    for (std::size_t i = 2; i < k.coords.size(); ++i) k.coords[i] = 1;
    return k;
}

SurfaceModel SurfaceModel::blow_up(BlowUpRecord rec) const {
    SurfaceModel out(*this);
    out.blowups_.push_back(std::move(rec));
    out.parent_id_ = id_;
    out.id_ = next_surface_id();
    return out;
}

DivisorClass SurfaceModel::embed(const DivisorClass& parent_class) const {
    if (parent_class.surface_id != parent_id_ || parent_class.coords.size() + 1 != basis_size())
        throw std::domain_error("class does not come from the parent surface");
    DivisorClass d{parent_class.coords, id_};
    d.coords.push_back(0);
    return d;
}

Int intersect(const SurfaceModel& s, const DivisorClass& a, const DivisorClass& b) {
    if (!s.owns(a) || !s.owns(b))
        throw std::domain_error("divisor class does not belong to this surface");
    // -e*a0*b0 + a0*b1 + a1*b0 - sum ai*bi
    Int r = checked_mul(-s.hirzebruch_e(), checked_mul(a.coords[0], b.coords[0]));
    r = checked_add(r, checked_mul(a.coords[0], b.coords[1]));
    r = checked_add(r, checked_mul(a.coords[1], b.coords[0]));
    for (std::size_t i = 2; i < a.coords.size(); ++i)
        r = checked_sub(r, checked_mul(a.coords[i], b.coords[i]));
    return r;
}

Int h0(const SurfaceModel& s, const DivisorClass& d) {
    if (!s.owns(d)) throw std::domain_error("divisor class does not belong to this surface");
    for (std::size_t i = 2; i < d.coords.size(); ++i)
        if (d.coords[i] > 0)
            throw std::domain_error("effective-part ambiguous: class adds exceptional divisor E" +
                                    std::to_string(i - 1) + "; split it off first");
    const Int a = d.coords[0];
    const Int b = d.coords[1];
    if (a < 0) return 0;
    const Int e = s.hirzebruch_e();
    Int base = 0;
    if (b >= 0) {
        // sum_{k=0..kmax} (b - k*e + 1), kmax = a for e = 0 and min(a, b/e) otherwise
        Int kmax = (e == 0) ? a : std::min(a, b / e);
        Int terms = checked_add(kmax, 1);
        base = checked_mul(terms, checked_add(b, 1));
        if (e > 0) base = checked_sub(base, checked_mul(e, checked_mul(kmax, terms) / 2));
    }
    for (std::size_t i = 2; i < d.coords.size(); ++i) {
        Int m = -d.coords[i];
        base = checked_sub(base, checked_mul(m, checked_add(m, 1)) / 2);
    }
    return base > 0 ? base : 0;
}

Int adjunction_genus(const SurfaceModel& s, const DivisorClass& c) {
    Int t = checked_add(intersect(s, c, c), intersect(s, c, s.canonical_class()));
    if (t % 2 != 0)
        throw std::domain_error("adjunction parity: C.(C+K) is odd, not a curve class in this lattice");
    return 1 + t / 2;
}

NefResult is_nef_and_big(const SurfaceModel& s, const DivisorClass& d) {
    std::vector<std::pair<std::string, DivisorClass>> tests;
    tests.emplace_back("C0", s.section());
    tests.emplace_back("F", s.fiber());
    for (std::size_t i = 1; i <= s.blowup_count(); ++i)
        tests.emplace_back("E" + std::to_string(i), s.exceptional(i));
    for (std::size_t i = 1; i <= s.blowup_count(); ++i)
        tests.emplace_back("F-E" + std::to_string(i), s.fiber() - s.exceptional(i));
    for (const auto& [name, curve] : tests)
        if (intersect(s, d, curve) < 0) return {false, name};
    if (intersect(s, d, d) <= 0) return {false, "self-intersection"};
    return {true, ""};
}

}  // namespace canon8
