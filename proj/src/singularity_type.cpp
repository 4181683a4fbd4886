#include "icis/singularity_type.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "icis/errors.hpp"

namespace icis {

namespace {

const char* prefix(Family f) {
  switch (f) {
    case Family::I: return "I";
    case Family::T: return "T";
    case Family::Jprime: return "J'";
    case Family::Kprime: return "K'";
    case Family::Kb: return "K^b";
    case Family::L: return "L";
    case Family::Lb: return "L^b";
    case Family::M: return "M";
  }
  return "?";
}

// (1,0) and (1,0,1) rows of the modular families.
bool is_one_zero(const std::vector<int>& v) { return v.size() >= 2 && v[0] == 1 && v[1] == 0; }

}  // namespace

const char* to_string(Family f) {
  switch (f) {
    case Family::I: return "I";
    case Family::T: return "T";
    case Family::Jprime: return "Jprime";
    case Family::Kprime: return "Kprime";
    case Family::Kb: return "Kb";
    case Family::L: return "L";
    case Family::Lb: return "Lb";
    case Family::M: return "M";
  }
  return "?";
}

bool SingularityType::has_modulus() const {
  switch (family) {
    case Family::I:
    case Family::Kprime:
    case Family::L:
    case Family::M: return is_one_zero(indices);
    case Family::T: return indices == std::vector<int>{2, 2, 2, 2};
    // J'_{m+1,0}; the exceptional rows start at 15.
    case Family::Jprime: return indices.size() == 2 && indices[0] < 9 && indices[1] == 0;
    case Family::Kb:
    case Family::Lb: return false;
  }
  return false;
}

std::string SingularityType::name() const {
  std::string s = prefix(family);
  s += "_{";
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(indices[k]);
  }
  return s + "}";
}

SingularityType make_T(int p, int q, int r, int s) {
  std::vector<int> v{p, q, r, s};
  std::sort(v.begin(), v.end(), [](int a, int b) {
    if ((a == 2) != (b == 2)) return b == 2;
    return a < b;
  });
  return {Family::T, v};
}

SingularityType parse_singularity_type(const std::string& text) {
  std::string t;
  for (std::size_t k = 0; k < text.size(); ++k) {
    // U+2032 PRIME
    if (text.compare(k, 3, "\xE2\x80\xB2") == 0) {
      t += '\'';
      k += 2;
    } else if (!std::isspace(static_cast<unsigned char>(text[k]))) {
      t += text[k];
    }
  }
  auto bad = [&] { return Error(ErrorKind::InvalidInput, "unknown singularity name '" + text + "'"); };
  auto open = t.find('_');
  if (open == std::string::npos) throw bad();
  std::string head = t.substr(0, open), body = t.substr(open + 1);
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw bad();
    body = body.substr(1, body.size() - 2);
  }
  SingularityType out;
  if (head == "I") out.family = Family::I;
  else if (head == "T") out.family = Family::T;
  else if (head == "J'") out.family = Family::Jprime;
  else if (head == "K'") out.family = Family::Kprime;
  else if (head == "K^b" || head == "Kb") out.family = Family::Kb;
  else if (head == "L") out.family = Family::L;
  else if (head == "L^b" || head == "Lb") out.family = Family::Lb;
  else if (head == "M") out.family = Family::M;
  else throw bad();
  std::stringstream ss(body);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit)) throw bad();
    out.indices.push_back(std::stoi(part));
  }
  if (out.indices.empty()) throw bad();
  if (out.family == Family::T) {
    if (out.indices.size() != 4) throw bad();
    return make_T(out.indices[0], out.indices[1], out.indices[2], out.indices[3]);
  }
  return out;
}

}  // namespace icis
