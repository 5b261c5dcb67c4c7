#ifndef DISKTRACE_GAMMA_HPP
#define DISKTRACE_GAMMA_HPP

namespace disktrace::special {

/// Gamma function on the positive half line.  Integer arguments up to 171
/// are evaluated by exact factorial; everything else by a Lanczos
/// approximation (g = 7, 9 terms), relative error below 1e-13 on (0, 50].
double gamma_fn(double x);

} // namespace disktrace::special

#endif
