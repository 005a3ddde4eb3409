// Copyright 2026 The exact1q developers
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

#include "exact1q/scalar.hpp"

#include <sstream>

namespace exact1q {

std::string QSqrt2::str() const {
    std::ostringstream out;
    if (b_ == 0) {
        out << a_;
    } else if (a_ == 0) {
        out << b_ << "*sqrt(2)";
    } else {
        out << a_ << (b_ > 0 ? " + " : " - ");
        Rational abs_b = b_ > 0 ? b_ : Rational(-b_);
        out << abs_b << "*sqrt(2)";
    }
    return out.str();
}

std::string ExactComplex::str() const {
    if (im_.is_zero()) {
        return re_.str();
    }
    std::ostringstream out;
    out << "(" << re_.str() << ") + (" << im_.str() << ")i";
    return out.str();
}

}  // namespace exact1q
