#pragma once

namespace udw {

// Imaginary error function erfi(x) = -i erf(ix) = 2/sqrt(pi) * int_0^x e^{t^2} dt.
// Relative accuracy ~1e-13 over the representable range.
double erfi(double x);

// Dawson function F(x) = e^{-x^2} int_0^x e^{t^2} dt = sqrt(pi)/2 * e^{-x^2} erfi(x).
double dawson(double x);

}  // namespace udw
