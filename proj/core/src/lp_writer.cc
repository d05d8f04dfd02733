// Copyright 2026 The secvne Authors.
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

// CPLEX LP writer. Layout:
//
//   Minimize
//    obj: 2 x_a + 1 y_b ...
//   Subject To
//    <name>: <terms> <sense> <rhs>
//   Binary
//    <variable>
//   End
//
// Unit coefficients are written without the number, other coefficients as
// "<coef> <var>". Long rows wrap onto continuation lines starting with a
// single space once they would pass kLineLimit characters.

#include <string>

#include "secvne/format.h"
#include "secvne/formulation.h"

namespace secvne {
namespace {

constexpr std::size_t kLineLimit = 250;

class LineBreaker {
 public:
  explicit LineBreaker(std::string* out) : out_(out) {}

  void Start(const std::string& head) {
    *out_ += head;
    line_length_ = head.size();
  }

  void Append(const std::string& token) {
    if (line_length_ + token.size() > kLineLimit) {
      *out_ += "\n";
      line_length_ = 0;
    }
    *out_ += token;
    line_length_ += token.size();
  }

  void End() { *out_ += "\n"; }

 private:
  std::string* out_;
  std::size_t line_length_ = 0;
};

void CheckName(const std::string& name) {
  if (name.size() > kMaxLpNameLength) {
    throw LpFormatError("name exceeds " + std::to_string(kMaxLpNameLength) +
                        " characters: " + name.substr(0, 40) + "...");
  }
  if (name.empty()) throw LpFormatError("empty name");
}

std::string TermText(double coef, const std::string& var, bool first) {
  std::string text = " ";
  const bool negative = coef < 0.0;
  const double magnitude = negative ? -coef : coef;
  if (negative) {
    text += "- ";
  } else if (!first) {
    text += "+ ";
  }
  if (magnitude != 1.0) text += format_number(magnitude) + " ";
  text += var;
  return text;
}

const char* SenseText(Sense sense) {
  switch (sense) {
    case Sense::kLessEqual: return " <= ";
    case Sense::kEqual: return " = ";
    case Sense::kGreaterEqual: return " >= ";
  }
  return " = ";
}

}  // namespace

std::string export_lp(const MipModel& model) {
  for (const MipVariable& var : model.variables) CheckName(var.name);
  for (const LinearConstraint& row : model.constraints) CheckName(row.name);

  std::string out = "Minimize\n";
  LineBreaker lines(&out);
  lines.Start(" obj:");
  bool first = true;
  for (const Term& t : model.objective) {
    lines.Append(TermText(t.coef, model.variables[t.var].name, first));
    first = false;
  }
  lines.End();

  // A row with no surviving variable still has to be stated; it borrows the
  // first variable with a zero coefficient, or a placeholder binary when the
  // filters removed every variable. Model names all start with x_ or y_.
  const std::string filler =
      model.variables.empty() ? std::string(kPlaceholderVariable) : model.variables.front().name;
  bool placeholder = false;
  out += "Subject To\n";
  for (const LinearConstraint& row : model.constraints) {
    lines.Start(" " + row.name + ":");
    if (row.terms.empty()) {
      lines.Append(" 0 " + filler);
      placeholder |= model.variables.empty();
    }
    first = true;
    for (const Term& t : row.terms) {
      lines.Append(TermText(t.coef, model.variables[t.var].name, first));
      first = false;
    }
    lines.Append(SenseText(row.sense) + format_number(row.rhs));
    lines.End();
  }

  out += "Binary\n";
  for (const MipVariable& var : model.variables) out += " " + var.name + "\n";
  if (placeholder) out += " " + std::string(kPlaceholderVariable) + "\n";
  out += "End\n";
  return out;
}

}  // namespace secvne
