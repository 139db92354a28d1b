#ifndef DEGEN_QUERY_HPP
#define DEGEN_QUERY_HPP

#include "degen/hypergeometric.hpp"
#include "degen/rational.hpp"

#include <optional>
#include <string>

namespace degen {

// One number of one family: the currency of the CLI and of table emission.
// For GolombekB the m field carries the k index of the sum.
enum class Family {
    Hseries,
    Hstirling,
    Hbell,
    Hlow,
    Qp,
    AltPow,
    LamH,
    LamT,
    T1closed,
    ApostolT,
    ApostolH,
    GolombekB,
};

struct NumberQuery {
    Family family = Family::Hseries;
    Index n = 0;
    Index m = 0;
    Index p = 1;
    Rational lambda = 0;
    Rational lambda1 = 1;
    EvalMode mode = EvalMode::exact();
};

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// Dispatches to the family's defining operation.
Value evaluate(const NumberQuery& q);

// "num/den" for exact values, 15 significant digits for numeric ones.
std::string format_value(const Value& v);

} // namespace degen

#endif
