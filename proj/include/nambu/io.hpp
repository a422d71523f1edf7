#ifndef NAMBU_IO_HPP
#define NAMBU_IO_HPP

#include <string>
#include <variant>
#include <vector>

#include "nambu/linalg.hpp"
#include "nambu/poly.hpp"
#include "nambu/tensor.hpp"

namespace nambu {

// Declared variable names; index in the vector = variable index.
struct VarTable {
    std::vector<std::string> names;

    int nvars() const { return static_cast<int>(names.size()); }
    int find(const std::string& name) const {
        for (int i = 0; i < nvars(); ++i)
            if (names[i] == name) return i;
        return -1;
    }
};

// Parsed expression value: polynomial scalar, multivector or form.
using ExprValue = std::variant<Poly, MultiVec, DiffForm>;

// Expression grammar (whitespace-insensitive):
//   atoms: integer literals, variable names, e<k> (basis vector d/dx_k,
//          1-based), d<name> (basis 1-form);
//   operators: + - * / ^ and parentheses; '/' only by nonzero constants;
//   '^' is integer power on scalars and the wedge product on tensors.
ExprValue parse_expression(const std::string& src, const VarTable& vars);

Poly parse_poly(const std::string& src, const VarTable& vars);
MultiVec parse_multivec(const std::string& src, const VarTable& vars);
DiffForm parse_form(const std::string& src, const VarTable& vars);

// Variable names inferred from identifier order of appearance; only for
// pure polynomial sources (no d/e basis atoms).
VarTable infer_vars(const std::vector<std::string>& sources);

// "1,2;3,-4/5" -> rows separated by ';', rational entries by ','.
RatMat parse_ratmat(const std::string& src);

// Canonical printers: deterministic term order, round-trip parseable.
std::string poly_str(const Poly& p, const VarTable& vars);
std::string mono_str(const Expo& e, const VarTable& vars); // "1" for the empty monomial
std::string tensor_str(const MultiVec& t, const VarTable& vars);
std::string tensor_str(const DiffForm& t, const VarTable& vars);
std::string ratmat_str(const RatMat& m);

VarTable default_vars(int nvars); // x1, x2, ...

} // namespace nambu

#endif
