// Copyright 2026 The porient Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PORIENT_RATIONAL_H_
#define PORIENT_RATIONAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace porient {

// Exact rational in canonical form. Every potential, edge share and gap in
// the pipeline is one of these; there is no floating point anywhere.
using Rational = mpq_class;

inline Rational MakeRational(int64_t num, int64_t den = 1) {
  Rational q(static_cast<long>(num), static_cast<unsigned long>(den > 0 ? den : -den));
  if (den < 0) q = -q;
  q.canonicalize();
  return q;
}

inline bool IsInteger(const Rational& q) { return q.get_den() == 1; }

inline mpz_class Floor(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline mpz_class Ceil(const Rational& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Ceiling as a machine integer; callers only use this on bounded gaps.
inline int64_t CeilInt(const Rational& q) { return Ceil(q).get_si(); }
inline int64_t FloorInt(const Rational& q) { return Floor(q).get_si(); }

// "num/den", or just "num" when integral.
inline std::string ToString(const Rational& q) { return q.get_str(); }

// Parses "a", "-a" or "a/b".
inline Rational ParseRational(const std::string& text) {
  Rational q(text, 10);
  q.canonicalize();
  return q;
}

}  // namespace porient

#endif  // PORIENT_RATIONAL_H_
