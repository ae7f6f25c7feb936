#pragma once

#include <complex>
#include <vector>

namespace blexpand {

using Complex = std::complex<double>;
// Ascending coefficients.
using ComplexPoly = std::vector<Complex>;

Complex evalPoly(const ComplexPoly& p, Complex z);
ComplexPoly derivative(const ComplexPoly& p);
// Coefficients of p(z0 + w) in w.
ComplexPoly taylorShift(const ComplexPoly& p, Complex z0);
// Removes exactly-zero leading coefficients.
ComplexPoly trimmed(ComplexPoly p);
// Fujiwara bound on root moduli.
double rootModulusBound(const ComplexPoly& p);

// All roots with multiplicity: exact zero roots from vanishing low
// coefficients, the rest as eigenvalues of the companion matrix of the
// rescaled polynomial, each polished by Newton steps while the residual
// improves. Throws DegreeZero for constants.
std::vector<Complex> polyRoots(const ComplexPoly& p);

// |p(z)| relative to sum |c_k| |z|^k.
double relativeResidual(const ComplexPoly& p, Complex z);

}  // namespace blexpand
