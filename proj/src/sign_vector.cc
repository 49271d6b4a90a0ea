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

#include "amplikit/sign_vector.h"

#include <algorithm>

#include "amplikit/errors.h"

namespace amplikit {

SignVector::SignVector(std::vector<int8_t> entries)
    : entries_(std::move(entries)) {
  for (int8_t e : entries_) {
    CheckArgument(e >= -1 && e <= 1, "sign entries must lie in {-1,0,1}");
  }
}

SignVector SignVector::FromString(std::string_view s) {
  std::vector<int8_t> entries;
  entries.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '+':
        entries.push_back(1);
        break;
      case '-':
        entries.push_back(-1);
        break;
      case '0':
        entries.push_back(0);
        break;
      default:
        throw InvalidArgument(std::string("bad sign symbol '") + c + "'");
    }
  }
  return SignVector(std::move(entries));
}

void SignVector::Set(int i, int sign) {
  CheckArgument(sign >= -1 && sign <= 1, "sign entries must lie in {-1,0,1}");
  entries_[i - 1] = static_cast<int8_t>(sign);
}

bool SignVector::IsZero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](int8_t e) { return e == 0; });
}

int SignVector::NumZeros() const {
  return static_cast<int>(std::count(entries_.begin(), entries_.end(), 0));
}

SignVector SignVector::Negated() const {
  SignVector out = *this;
  for (int8_t& e : out.entries_) e = static_cast<int8_t>(-e);
  return out;
}

std::string SignVector::ToString() const {
  std::string s;
  s.reserve(entries_.size());
  for (int8_t e : entries_) s.push_back(e > 0 ? '+' : (e < 0 ? '-' : '0'));
  return s;
}

int Var(const SignVector& v) {
  int changes = -1;
  int last = 0;
  for (int8_t e : v.entries()) {
    if (e == 0) continue;
    if (last == 0) {
      changes = 0;
    } else if (e != last) {
      ++changes;
    }
    last = e;
  }
  return changes;
}

int VarBar(const SignVector& v) {
  const std::vector<int8_t>& e = v.entries();
  const int n = v.size();
  int first = -1;
  int last = -1;
  for (int i = 0; i < n; ++i) {
    if (e[i] == 0) continue;
    if (first < 0) first = i;
    last = i;
  }
  if (first < 0) return n - 1;
  // Each zero outside the outermost nonzero entries can be made a change.
  int total = first + (n - 1 - last);
  int prev = first;
  for (int i = first + 1; i <= last; ++i) {
    if (e[i] == 0) continue;
    const int gap = i - prev - 1;
    // An alternating run from e[prev] across the gap ends with sign
    // e[prev] * (-1)^(gap+1); if that agrees with e[i] every step changes.
    const int end_sign = ((gap + 1) % 2 == 0) ? e[prev] : -e[prev];
    total += (end_sign == e[i]) ? gap + 1 : gap;
    prev = i;
  }
  return total;
}

SignVector Alt(const SignVector& v) {
  std::vector<int8_t> out = v.entries();
  for (size_t i = 1; i < out.size(); i += 2) {
    out[i] = static_cast<int8_t>(-out[i]);
  }
  return SignVector(std::move(out));
}

bool SignLeq(const SignVector& sigma, const SignVector& tau) {
  CheckArgument(sigma.size() == tau.size(), "sign vector length mismatch");
  for (int i = 1; i <= sigma.size(); ++i) {
    if (sigma[i] != 0 && sigma[i] != tau[i]) return false;
  }
  return true;
}

bool ProjectiveSignLeq(const SignVector& sigma, const SignVector& tau) {
  return SignLeq(sigma, tau) || SignLeq(sigma, tau.Negated());
}

SignVector Compose(const SignVector& sigma, const SignVector& tau) {
  CheckArgument(sigma.size() == tau.size(), "sign vector length mismatch");
  std::vector<int8_t> out = sigma.entries();
  for (int i = 0; i < sigma.size(); ++i) {
    if (out[i] == 0) out[i] = tau.entries()[i];
  }
  return SignVector(std::move(out));
}

bool IsAltNormalized(const SignVector& v) {
  for (int i = 1; i <= v.size(); ++i) {
    if (v[i] != 0) return v[i] == ((i % 2 == 1) ? 1 : -1);
  }
  return false;
}

SignVector AltNormalize(const SignVector& v) {
  CheckArgument(!v.IsZero(), "cannot normalize the zero sign vector");
  return IsAltNormalized(v) ? v : v.Negated();
}

std::vector<SignVector> AllSignVectors(int n) {
  CheckArgument(n >= 0, "negative length");
  std::vector<SignVector> out;
  std::vector<int8_t> cur(n, -1);
  while (true) {
    out.emplace_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[i] == 1) {
      cur[i] = -1;
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  return out;
}

std::vector<SignVector> EnumerateSignSet(int n, int k, bool closed) {
  CheckArgument(n >= 1, "n must be positive");
  CheckArgument(k >= 0 && k <= n - 1, "need 0 <= k <= n-1");
  CheckScale(n <= 16, "sign set enumeration limited to n <= 16");
  std::vector<SignVector> out;
  for (const SignVector& v : AllSignVectors(n)) {
    if (!closed && v.NumZeros() > 0) continue;
    if (v.IsZero() || !IsAltNormalized(v)) continue;
    if (VarBar(v) == k) out.push_back(v);
  }
  return out;
}

}  // namespace amplikit
