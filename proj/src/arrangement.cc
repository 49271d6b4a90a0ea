// Copyright 2026 The Authors.
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

#include "amplikit/arrangement.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "amplikit/errors.h"

namespace amplikit {

namespace {

Relation RelationOf(int sign) {
  return sign > 0 ? Relation::kPositive
                  : (sign < 0 ? Relation::kNegative : Relation::kZero);
}

int64_t Binomial(int64_t n, int64_t r) {
  if (r < 0 || r > n) return 0;
  int64_t b = 1;
  for (int64_t i = 1; i <= r; ++i) b = b * (n - r + i) / i;
  return b;
}

std::string VariableName(int j, int k) {
  if (k <= 3) return std::string(1, "xyz"[j - 1]);
  return "x" + std::to_string(j);
}

}  // namespace

RationalVector OrientationVector(const Subspace& v, const RationalVector& w) {
  CheckArgument(static_cast<int>(w.size()) == v.ambient(), "ambient mismatch");
  const int d = v.dim();
  // Solve G c = B w with G the Gram matrix of the basis B; u = w - B^T c.
  RationalMatrix gram(d, d + 1);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      gram(i, j) = Dot(v.basis().Row(i), v.basis().Row(j));
    }
    gram(i, d) = Dot(v.basis().Row(i), w);
  }
  const RowEchelonForm ref = ReducedRowEchelon(gram);
  RationalVector u = w;
  for (int i = 0; i < d; ++i) {
    const Rational c = ref.reduced(i, d);
    for (int t = 0; t < v.ambient(); ++t) u[t] -= c * v.basis()(i, t);
  }
  return u;
}

int OrientationSign(const Subspace& v, const RationalVector& w) {
  const RationalVector u = OrientationVector(v, w);
  const SignVector s = SignOf(u);
  CheckArgument(Var(s) == v.dim() && VarBar(s) == v.dim(),
                "orientation vector must have var = varbar = dim V");
  return sgn(u[0]);
}

CyclicArrangement CyclicArrangement::Build(
    const std::vector<RationalVector>& basis, bool relaxed) {
  CheckArgument(basis.size() >= 2, "need w_0 and at least one normal");
  const int n = static_cast<int>(basis[0].size());
  const int k = static_cast<int>(basis.size()) - 1;
  CheckArgument(k < n, "need k < n");
  CyclicArrangement a;
  a.w0_ = basis[0];
  a.normals_.assign(basis.begin() + 1, basis.end());
  const Subspace v = Subspace::Span(a.normals_, n);
  CheckArgument(v.dim() == k, "normal vectors are linearly dependent");
  CheckArgument(IsTotallyPositiveSubspace(v),
                "span(w_1..w_k) is not totally positive");
  const Subspace w = Subspace::Span(basis, n);
  CheckArgument(w.dim() == k + 1, "w_0 lies in span(w_1..w_k)");
  if (!relaxed) {
    CheckArgument(IsTotallyPositiveSubspace(w),
                  "span(w_0..w_k) is not totally positive");
  }
  // Genericity: any k normals independent, any k+1 hyperplanes disjoint.
  const RationalMatrix full = RationalMatrix::FromRows(basis, n).Transpose();
  for (SubsetMask rows : KSubsets(n, k)) {
    std::vector<int> r, c;
    for (int e : MaskElements(rows)) r.push_back(e - 1);
    for (int j = 1; j <= k; ++j) c.push_back(j);
    CheckArgument(Minor(full, r, c) != 0, "hyperplane normals not generic");
  }
  for (SubsetMask rows : KSubsets(n, k + 1)) {
    std::vector<int> r, c;
    for (int e : MaskElements(rows)) r.push_back(e - 1);
    for (int j = 0; j <= k; ++j) c.push_back(j);
    CheckArgument(Minor(full, r, c) != 0,
                  "k+1 hyperplanes share a point; arrangement not generic");
  }
  if (!relaxed) {
    a.u_ = OrientationVector(v, a.w0_);
    if (OrientationSign(v, a.w0_) < 0) {
      for (Rational& x : a.w0_) x = -x;
      for (Rational& x : a.u_) x = -x;
      a.negated_w0_ = true;
    }
  } else {
    a.u_ = OrientationVector(v, a.w0_);
  }
  return a;
}

RationalVector CyclicArrangement::Normal(int i) const {
  RationalVector out;
  for (const RationalVector& w : normals_) out.push_back(w[i - 1]);
  return out;
}

RationalVector CyclicArrangement::Evaluate(const RationalVector& x) const {
  CheckArgument(static_cast<int>(x.size()) == k(), "point dimension mismatch");
  RationalVector out = w0_;
  for (int j = 0; j < k(); ++j) {
    for (int i = 0; i < n(); ++i) out[i] += x[j] * normals_[j][i];
  }
  return out;
}

std::string CyclicArrangement::HyperplaneString(int i) const {
  std::string s;
  for (int j = 1; j <= k(); ++j) {
    const Rational& c = normals_[j - 1][i - 1];
    if (c == 0) continue;
    const Rational mag = abs(c);
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (mag != 1) s += mag.get_str();
    s += VariableName(j, k());
  }
  const Rational rhs = -w0_[i - 1];
  return s + " = " + rhs.get_str();
}

CyclicArrangement VandermondeArrangement(const RationalVector& t, int k) {
  const RationalMatrix m = VandermondeMatrix(t, k + 1);
  return CyclicArrangement::Build(m.RowVectors());
}

std::optional<RationalVector> FaceWitness(const CyclicArrangement& a,
                                          const SignVector& sigma) {
  CheckArgument(sigma.size() == a.n(), "label length mismatch");
  std::vector<LinearConstraint> cs;
  for (int i = 1; i <= a.n(); ++i) {
    cs.push_back({a.Normal(i), a.w0()[i - 1], RelationOf(sigma[i])});
  }
  return SignFeasible(cs, a.k());
}

bool IsBoundedFace(const CyclicArrangement& a, const SignVector& sigma) {
  // A recession direction d keeps every defining sign weakly and moves off
  // the face's affine span in no direction; d != 0 iff some a_i . d != 0
  // because the normals span R^k.
  for (int j = 1; j <= a.n(); ++j) {
    if (sigma[j] == 0) continue;
    std::vector<LinearConstraint> cs;
    for (int i = 1; i <= a.n(); ++i) {
      Relation rel;
      if (sigma[i] == 0) {
        rel = Relation::kZero;
      } else if (i == j) {
        rel = sigma[i] > 0 ? Relation::kPositive : Relation::kNegative;
      } else {
        rel = sigma[i] > 0 ? Relation::kNonNegative : Relation::kNonPositive;
      }
      cs.push_back({a.Normal(i), 0, rel});
    }
    if (SignFeasible(cs, a.k())) return false;
  }
  return true;
}

std::vector<Face> EnumerateFaces(const CyclicArrangement& a, bool full_sweep) {
  CheckScale(a.n() <= 10, "face enumeration limited to n <= 10");
  std::vector<Face> out;
  for (const SignVector& sigma : AllSignVectors(a.n())) {
    if (!full_sweep && (VarBar(sigma) > a.k() || sigma.NumZeros() > a.k())) {
      continue;
    }
    std::optional<RationalVector> x = FaceWitness(a, sigma);
    if (!x) continue;
    Face f;
    f.label = sigma;
    f.dim = a.k() - sigma.NumZeros();
    f.bounded = IsBoundedFace(a, sigma);
    f.witness = std::move(*x);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<int64_t> FVector(const std::vector<Face>& faces, int k,
                             bool bounded_only) {
  std::vector<int64_t> f(k + 1, 0);
  for (const Face& face : faces) {
    if (bounded_only && !face.bounded) continue;
    ++f[face.dim];
  }
  return f;
}

std::vector<int64_t> FPolynomial(int n, int k) {
  CheckArgument(n >= 1 && k >= 0 && k <= n - 1, "need 0 <= k <= n-1");
  CheckScale(n <= 60, "f-polynomial limited to n <= 60");
  std::vector<int64_t> first(k + 1), second(k + 1, 0);
  for (int i = 0; i <= k; ++i) {
    first[i] = Binomial(n - k - 1 + i, i) * Binomial(n, k - i);
  }
  for (int j = 0; j <= k; ++j) {
    const int64_t c = Binomial(n - k - 1 + j, j);
    for (int i = 0; i <= j; ++i) second[i] += c * Binomial(j, i);
  }
  if (first != second) {
    throw std::logic_error("f-polynomial closed forms disagree");
  }
  return first;
}

std::string FormatPolynomial(const std::vector<int64_t>& coeffs) {
  static const char* kSuperscript[] = {"⁰", "¹", "²", "³", "⁴",
                                       "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    const int64_t c = coeffs[i];
    if (c == 0) continue;
    if (!s.empty()) s += c < 0 ? "-" : "+";
    else if (c < 0) s += "-";
    const int64_t mag = c < 0 ? -c : c;
    if (mag != 1 || i == 0) s += std::to_string(mag);
    if (i >= 1) s += "q";
    if (i >= 2) {
      for (char digit : std::to_string(i)) s += kSuperscript[digit - '0'];
    }
  }
  return s.empty() ? "0" : s;
}

int64_t EvaluatePolynomial(const std::vector<int64_t>& coeffs, int64_t q) {
  int64_t value = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    value = value * q + *it;
  }
  return value;
}

std::string FacesToCsv(const std::vector<Face>& faces) {
  std::ostringstream out;
  out << "label,dimension,bounded,witness\n";
  for (const Face& f : faces) {
    out << f.label.ToString() << "," << f.dim << ","
        << (f.bounded ? "true" : "false") << ",";
    for (size_t j = 0; j < f.witness.size(); ++j) {
      if (j > 0) out << ";";
      out << FormatRational(f.witness[j]);
    }
    out << "\n";
  }
  return out.str();
}

std::string ArrangementSvg(const CyclicArrangement& a,
                           const std::vector<Face>& faces) {
  CheckArgument(a.k() == 2, "pictures are drawn for k = 2 only");
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (const Face& f : faces) {
    if (!f.bounded) continue;
    xmin = std::min(xmin, f.witness[0].get_d());
    xmax = std::max(xmax, f.witness[0].get_d());
    ymin = std::min(ymin, f.witness[1].get_d());
    ymax = std::max(ymax, f.witness[1].get_d());
  }
  if (xmin > xmax) {
    xmin = ymin = -1;
    xmax = ymax = 1;
  }
  const double span = std::max({xmax - xmin, ymax - ymin, 1e-9});
  xmin -= 0.25 * span;
  xmax += 0.25 * span;
  ymin -= 0.25 * span;
  ymax += 0.25 * span;
  const double size = 600;
  const double scale = size / std::max(xmax - xmin, ymax - ymin);
  auto px = [&](double x) { return (x - xmin) * scale; };
  auto py = [&](double y) { return size - (y - ymin) * scale; };

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
      << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " " << size
      << "\">\n";
  for (int i = 1; i <= a.n(); ++i) {
    const double p = a.normals()[0][i - 1].get_d();
    const double q = a.normals()[1][i - 1].get_d();
    const double c = a.w0()[i - 1].get_d();
    double x1, y1, x2, y2;
    if (std::abs(q) >= std::abs(p)) {
      x1 = xmin;
      x2 = xmax;
      y1 = -(c + p * x1) / q;
      y2 = -(c + p * x2) / q;
    } else {
      y1 = ymin;
      y2 = ymax;
      x1 = -(c + q * y1) / p;
      x2 = -(c + q * y2) / p;
    }
    out << "  <line x1=\"" << px(x1) << "\" y1=\"" << py(y1) << "\" x2=\""
        << px(x2) << "\" y2=\"" << py(y2)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  for (const Face& f : faces) {
    if (!f.bounded || f.dim != 2) continue;
    out << "  <text x=\"" << px(f.witness[0].get_d()) << "\" y=\""
        << py(f.witness[1].get_d())
        << "\" font-size=\"10\" text-anchor=\"middle\">" << f.label.ToString()
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace amplikit
