// Copyright 2026 The ccc Authors
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

#pragma once

#include <gmpxx.h>

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ccc {

// Error categories. Every failure raised by the library derives from Error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad dimensions, not a partition, unknown color, parse errors.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Input exceeds a configured size limit.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class ContractError : public Error {
 public:
  using Error::Error;
};

// An internal limit that should be unreachable was hit (iteration caps).
class DiagnosticError : public Error {
 public:
  using Error::Error;
};

using Rational = mpq_class;

using Vertex = int;
using Color = int;

// Vertex subsets are bitmasks; bit v set means vertex v is a member.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexSet Singleton(Vertex v) { return VertexSet{1} << v; }

inline constexpr VertexSet FullSet(int n) {
  return n >= kMaxVertices ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline constexpr bool Contains(VertexSet s, Vertex v) { return (s >> v) & 1U; }

inline constexpr int Size(VertexSet s) { return std::popcount(s); }

inline constexpr Vertex MinVertex(VertexSet s) { return std::countr_zero(s); }

inline constexpr bool IsSubset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

inline constexpr std::int64_t Choose2(std::int64_t k) { return k * (k - 1) / 2; }

inline std::vector<Vertex> Members(VertexSet s) {
  std::vector<Vertex> out;
  out.reserve(Size(s));
  while (s != 0) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

inline VertexSet MakeSet(const std::vector<Vertex>& vs) {
  VertexSet s = 0;
  for (Vertex v : vs) s |= Singleton(v);
  return s;
}

// Index of the unordered pair {u, v}, u != v, in a flat upper-triangular table.
inline constexpr std::size_t PairIndex(int n, Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return static_cast<std::size_t>(u) * (2 * n - u - 1) / 2 +
         static_cast<std::size_t>(v - u - 1);
}

inline constexpr std::size_t PairCount(int n) {
  return static_cast<std::size_t>(n) * (n - 1) / 2;
}

// num / den in canonical form. gmpxx leaves two-argument construction
// uncanonicalized, which breaks comparisons.
inline Rational Frac(std::int64_t num, std::int64_t den) {
  Rational q{mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))};
  q.canonicalize();
  return q;
}

// Exact "p/q" text form. The denominator is always written.
inline std::string RationalToString(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

// Accepts "p/q", integers, and finite decimals such as "0.02" or "-1.5".
inline Rational ParseRational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw StructuralError("empty rational literal");
  try {
    if (auto dot = s.find('.'); dot != std::string::npos) {
      if (s.find('/') != std::string::npos) {
        throw StructuralError("malformed rational literal: " + s);
      }
      std::string frac = s.substr(dot + 1);
      std::string whole = s.substr(0, dot);
      bool negative = !whole.empty() && whole[0] == '-';
      if (negative || (!whole.empty() && whole[0] == '+')) whole.erase(0, 1);
      if (whole.empty()) whole = "0";
      if (frac.empty()) frac = "0";
      for (char ch : whole + frac) {
        if (ch < '0' || ch > '9') {
          throw StructuralError("malformed rational literal: " + s);
        }
      }
      mpz_class den;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
      Rational q(mpz_class(whole + frac), den);
      q.canonicalize();
      return negative ? Rational(-q) : q;
    }
    Rational q(s);
    if (q.get_den() == 0) throw StructuralError("zero denominator: " + s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw StructuralError("malformed rational literal: " + s);
  }
}

}  // namespace ccc
