#include "degen/query.hpp"

#include "degen/errors.hpp"
#include "degen/hyper_numbers.hpp"

#include <array>
#include <cstdio>

namespace degen {

namespace {

struct FamilyName {
    Family family;
    const char* name;
};

constexpr std::array<FamilyName, 12> kFamilies{{
    {Family::Hseries, "Hseries"},
    {Family::Hstirling, "Hstirling"},
    {Family::Hbell, "Hbell"},
    {Family::Hlow, "Hlow"},
    {Family::Qp, "Qp"},
    {Family::AltPow, "AltPow"},
    {Family::LamH, "LamH"},
    {Family::LamT, "LamT"},
    {Family::T1closed, "T1closed"},
    {Family::ApostolT, "ApostolT"},
    {Family::ApostolH, "ApostolH"},
    {Family::GolombekB, "GolombekB"},
}};

} // namespace

const char* family_name(Family f) {
    for (const auto& e : kFamilies)
        if (e.family == f) return e.name;
    return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
    for (const auto& e : kFamilies)
        if (name == e.name) return e.family;
    return std::nullopt;
}

Value evaluate(const NumberQuery& q) {
    switch (q.family) {
    case Family::Hseries:
        return h_p_series(q.n, q.m, q.p, q.lambda, q.mode);
    case Family::Hstirling:
        return Value(h_stirling_form(q.n, q.m, q.p, q.lambda));
    case Family::Hbell:
        return Value(h_bell_form(q.n, q.m, q.lambda));
    case Family::Hlow:
        return Value(h_low_closed(q.n, q.m, q.lambda));
    case Family::Qp:
        return h_p_series(q.n, q.m, 2, q.lambda, q.mode);
    case Family::AltPow:
        return alt_power_sum(q.n, q.p, q.lambda, q.mode);
    case Family::LamH:
        return Value(lambda_hyper_H(q.n, q.m, q.p, q.lambda));
    case Family::LamT:
        return Value(lambda_hyper_T(q.n, q.m, q.p, q.lambda));
    case Family::T1closed:
        return Value(t1_closed(q.n, q.m, q.lambda));
    case Family::ApostolT:
        return Value(apostol_T(q.n, q.m, q.lambda, q.lambda1).direct);
    case Family::ApostolH:
        return Value(apostol_H(q.n, q.m, q.p, q.lambda, q.lambda1));
    case Family::GolombekB:
        return Value(golombek_B_deg(q.n, q.m, q.lambda));
    }
    throw DomainError("unknown family");
}

std::string format_value(const Value& v) {
    if (is_exact(v)) return to_string(exact(v));
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", std::get<double>(v));
    return buf;
}

} // namespace degen
