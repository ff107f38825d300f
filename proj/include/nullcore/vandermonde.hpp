// Copyright 2026 The nullcore Authors
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

// Invertibility of the 3-block Vandermonde matrix V(A,B,C) for A, B, C in a
// class C(m), split by which of B-A and C-A are invertible, and the
// splitting-field machinery behind the invertible-difference property of S_A.
//
// Every check here runs two independent computations and throws
// VerificationFailed when they disagree.

#include <optional>
#include <span>
#include <vector>

#include "nullcore/linalg.hpp"

namespace nullcore {

struct PairAnalysis {
  Matrix a;
  Matrix b;
  bool singular;              // B - A singular
  Subspace null_diff;         // left nullspace of B - A
  Subspace null_sq_diff;      // left nullspace of B^2 - A^2
  std::optional<Subspace> null_sum;  // their sum, when B - A is singular
  Subspace row_meet;          // row(B - A) meet row(B^2 - A^2)
};

/// When B - A is singular this also checks, for every scalar lambda, how
/// the nullspaces of B^2 - A^2 - lambda(B - A) arise from those of B - A,
/// and the dimensions of the nullspace sum and of the row space meet.
/// Throws BadInput if A == B or A, B are not in one class.
PairAnalysis pair_analysis(const Matrix& a, const Matrix& b);

/// B - A singular <=> B^2 - A^2 - lambda(B - A) singular for all lambda
/// <=> for some lambda. Returns whether the three agree.
bool inv_diff_equivalence(const Matrix& a, const Matrix& b);

/// a1(B-A) + a2(A+a)(B-A) - a2(B^2-A^2) + a3(A+a)(B^2-A^2), where a is the
/// x^2 coefficient of m. Checks that the result is invertible or zero, and
/// zero only for a1 = a2 = a3 = 0. Throws BadInput if B - A is singular.
Matrix mixed_M(const Matrix& a, const Matrix& b, const FieldElem& a1, const FieldElem& a2,
               const FieldElem& a3);

enum class TripleCase { BothSingular, Mixed, BothInvertible };
const char* to_string(TripleCase c) noexcept;

struct TripleClassification {
  TripleCase tag;
  bool v_invertible;
  std::optional<bool> same_nullspace;  // BothSingular
  std::optional<Matrix> q_b;           // BothInvertible
  std::optional<Matrix> q_c;
  std::optional<bool> q_equal;
};

/// Decides invertibility of V(A,B,C) both by a direct 9x9 rank and by the
/// case criterion, with A as the base point. Throws BadInput for repeated
/// inputs or inputs from different classes.
TripleClassification classify_triple(const Matrix& a, const Matrix& b, const Matrix& c);

/// (B - A) B (B - A)^-1. Throws BadInput if B - A is singular.
Matrix q_of(const Matrix& a, const Matrix& b);

/// True iff every difference of two distinct members is invertible.
bool idp_check(std::span<const Matrix> s);

/// [U, A] invertible <=> U A U^-1 - A invertible.
bool commutator_bridge(const Matrix& u, const Matrix& a);

struct ExtensionContext {
  UPoly m;
  FieldPtr base;
  FieldPtr k;              // base[x]/(m)
  Code alpha;              // class of x
  Code alpha_q;            // sigma(alpha)
  Code alpha_q2;           // sigma^2(alpha)
  Matrix companion;        // companion(m) over the base
  Matrix p;                // rows (1, s^i(alpha), s^i(alpha^2)), over K
  Matrix p_inv;
  Matrix d;                // diag(alpha, sigma alpha, sigma^2 alpha)
  Code delta;              // (s a - a)(s^2 a - s a)(a - s^2 a)
  Code det_p;              // lies in the base field
};

/// Throws BadInput unless m is a monic irreducible cubic, Unsupported if m
/// is inseparable.
ExtensionContext extension_context(const UPoly& m);

/// X = P U P^-1 satisfies x22 = s(x11), x33 = s^2(x11), x23 = s(x12),
/// x31 = s^2(x12), x21 = s(x13), x32 = s^2(x13).
bool xentries_check(const Matrix& u, const ExtensionContext& ctx);

enum class FormTag { I, II, III };
const char* to_string(FormTag t) noexcept;

struct CanonicalForm {
  FormTag tag;
  Code x;        // form III parameter, 0 otherwise
  Matrix matrix; // over K
};

/// Reduces X1 = P U P^-1 to one of the three normal forms and checks that
/// [X,D] D [X,D]^-1 still equals P Q P^-1 for Q = [U,A] A [U,A]^-1.
/// Throws BadInput if [U, A] is singular.
CanonicalForm canonical_form(const Matrix& u, const ExtensionContext& ctx);

/// [X,D] D [X,D]^-1 for X over K.
Matrix commutator_conjugate(const Matrix& x, const ExtensionContext& ctx);

/// Closed form of det([X,D]D[X,D]^-1 - [Y,D]D[Y,D]^-1) from the
/// off-diagonal entries of X and Y, compared with the direct determinant:
///   -delta (x23 y13 - x13 y23)(x31 y21 - x21 y31)(x32 y12 - x12 y32)
///   / ((x12 x23 x31 - x13 x21 x32)(y12 y23 y31 - y13 y21 y32))
/// Throws BadInput when either commutator is singular.
FieldElem sdiff_det(const Matrix& x, const Matrix& y, const ExtensionContext& ctx);

/// det[X,D] = (d2-d1)(d3-d2)(d1-d3)(x12 x23 x31 - x13 x21 x32) for diagonal D.
bool diagcomm_identity(const Matrix& x, const Matrix& d);

}  // namespace nullcore
