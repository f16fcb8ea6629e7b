#include "core/envelope.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "core/json_io.hpp"

namespace dcg {

bool Envelope::is_real() const {
  for (const Complex& s : samples)
    if (s.imag() != 0.0) return false;
  return true;
}

double Envelope::area() const {
  double acc = 0.0;
  for (const Complex& s : samples) acc += s.real();
  return acc * dt_ns;
}

Envelope Envelope::scaled(double factor) const {
  Envelope out = *this;
  for (Complex& s : out.samples) s *= factor;
  return out;
}

double Envelope::peak_abs() const {
  double peak = 0.0;
  for (const Complex& s : samples) peak = std::max(peak, std::abs(s));
  return peak;
}

void write_envelope_csv(const Envelope& env, const std::string& path) {
  std::string body = "t_ns,omega_x_rad_per_s,omega_y_rad_per_s\n";
  char line[128];
  for (std::size_t i = 0; i < env.samples.size(); ++i) {
    double t = (static_cast<double>(i) + 0.5) * env.dt_ns;
    // internal rad/ns -> rad/s
    std::snprintf(line, sizeof(line), "%.9f,%.17g,%.17g\n", t, env.samples[i].real() * 1e9,
                  env.samples[i].imag() * 1e9);
    body += line;
  }
  write_file_atomic(path, body);
}

}  // namespace dcg
