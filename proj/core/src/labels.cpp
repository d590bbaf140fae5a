#include "mfstab/labels.hpp"

#include <algorithm>
#include <cctype>

namespace mfstab {

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::H: return "H";
    case Family::Ky: return "Ky";
    case Family::Ideal: return "I";
    case Family::Free: return "R";
  }
  return {};
}

namespace {

bool family_in_ring(Family f, RingSpec ring) {
  if (f == Family::Free) return ring.is_quotient();
  bool dinf_family = f == Family::A || f == Family::B || f == Family::C || f == Family::D ||
                     f == Family::E || f == Family::F || f == Family::G || f == Family::H;
  return dinf_family ? ring == RingSpec::dinf() : ring == RingSpec::ainf();
}

}  // namespace

ObjectLabel ObjectLabel::one_index(RingSpec ring, Family f, int i) {
  ObjectLabel l{ring, f, i, 0};
  l.require_valid();
  return l;
}

ObjectLabel ObjectLabel::two_index(RingSpec ring, Family f, int i, int j) {
  ObjectLabel l{ring, f, i, j};
  l.require_valid();
  return l;
}

int ObjectLabel::index_count() const {
  switch (family) {
    case Family::E:
    case Family::F:
    case Family::G:
    case Family::H:
    case Family::Ideal: return 2;
    default: return 1;
  }
}

bool ObjectLabel::is_valid() const {
  if (!family_in_ring(family, ring)) return false;
  switch (family) {
    case Family::E:
    case Family::F:
    case Family::G: return j >= i + 1;
    case Family::H: return j >= i;
    case Family::Ideal: return i >= 1;  // i holds m
    default: return true;
  }
}

void ObjectLabel::require_valid() const {
  if (!is_valid())
    throw std::invalid_argument("invalid object label " + str() + " over " + ring.name());
}

ObjectLabel ObjectLabel::twisted(int t) const {
  ObjectLabel l = *this;
  switch (family) {
    case Family::Ideal: l.j += t; break;  // only the twist s moves
    default:
      l.i += t;
      if (index_count() == 2) l.j += t;
  }
  return l;
}

std::string ObjectLabel::str() const {
  std::string s = family_name(family) + "(" + std::to_string(i);
  if (index_count() == 2) s += "," + std::to_string(j);
  return s + ")";
}

LabelSum LabelSum::twisted(int t) const {
  LabelSum s;
  for (const auto& l : parts) s.parts.push_back(l.twisted(t));
  return s;
}

LabelSum LabelSum::without_free() const {
  LabelSum s;
  for (const auto& l : parts)
    if (!l.is_free()) s.parts.push_back(l);
  return s;
}

std::string LabelSum::str() const {
  if (parts.empty()) return "0";
  std::string s;
  for (size_t k = 0; k < parts.size(); ++k) {
    if (k) s += " + ";
    s += parts[k].str();
  }
  return s;
}

namespace {

struct LabelParser {
  std::string text;  // whitespace stripped
  size_t i = 0;

  explicit LabelParser(const std::string& raw) {
    for (char c : raw)
      if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  }

  bool eof() const { return i >= text.size(); }
  char peek() const { return eof() ? '\0' : text[i]; }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse label '" + text + "': " + why);
  }

  int integer() {
    size_t start = i;
    if (peek() == '-' || peek() == '+') ++i;
    while (!eof() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      fail("expected integer");
    return std::stoi(text.substr(start, i - start));
  }

  ObjectLabel single(RingSpec ring) {
    Family fam;
    if (text.compare(i, 2, "Ky") == 0) {
      fam = Family::Ky;
      i += 2;
    } else {
      switch (peek()) {
        case 'A': fam = Family::A; break;
        case 'B': fam = Family::B; break;
        case 'C': fam = Family::C; break;
        case 'D': fam = Family::D; break;
        case 'E': fam = Family::E; break;
        case 'F': fam = Family::F; break;
        case 'G': fam = Family::G; break;
        case 'H': fam = Family::H; break;
        case 'I': fam = Family::Ideal; break;
        case 'R': fam = Family::Free; break;
        default: fail("unknown family letter");
      }
      ++i;
    }
    if (peek() != '(') fail("expected '('");
    ++i;
    ObjectLabel l;
    l.ring = ring;
    l.family = fam;
    l.i = integer();
    if (l.index_count() == 2) {
      if (peek() != ',') fail("family " + family_name(fam) + " needs two indices");
      ++i;
      l.j = integer();
    }
    if (peek() != ')') fail("expected ')'");
    ++i;
    if (!family_in_ring(fam, ring))
      fail("family " + family_name(fam) + " does not live over " + ring.name());
    l.require_valid();
    return l;
  }
};

}  // namespace

LabelSum parse_label(const std::string& text, RingSpec ring) {
  LabelParser p(text);
  LabelSum sum;
  if (p.eof()) return sum;  // empty text = zero object
  sum.parts.push_back(p.single(ring));
  while (!p.eof()) {
    if (p.peek() != '+') p.fail("expected '+' between summands");
    ++p.i;
    sum.parts.push_back(p.single(ring));
  }
  return sum;
}

ObjectLabel parse_single_label(const std::string& text, RingSpec ring) {
  LabelSum s = parse_label(text, ring);
  if (!s.is_indecomposable())
    throw std::invalid_argument("expected a single label, got '" + text + "'");
  return s.parts[0];
}

ObjectLabel syzygy_label(const ObjectLabel& l) {
  ObjectLabel r = l;
  switch (l.family) {
    case Family::A: r.family = Family::B; r.i = l.i + 1; break;
    case Family::B: r.family = Family::A; r.i = l.i - 2; break;
    case Family::C: r.family = Family::D; break;
    case Family::D: r.family = Family::C; r.i = l.i - 1; break;
    case Family::E: r.family = Family::F; break;
    case Family::F: r.family = Family::E; r.i = l.i - 1; r.j = l.j - 1; break;
    case Family::G: r.family = Family::H; r.j = l.j - 1; break;
    case Family::H: r.family = Family::G; r.i = l.i - 1; break;
    case Family::Ky: r.i = l.i - 1; break;
    case Family::Ideal: r.j = l.j - 1; break;
    case Family::Free: break;  // stably zero either way
  }
  return r;
}

ObjectLabel suspend_label(const ObjectLabel& l) {
  ObjectLabel r = l;
  switch (l.family) {
    case Family::A: r.family = Family::B; r.i = l.i + 2; break;
    case Family::B: r.family = Family::A; r.i = l.i - 1; break;
    case Family::C: r.family = Family::D; r.i = l.i + 1; break;
    case Family::D: r.family = Family::C; break;
    case Family::E: r.family = Family::F; r.i = l.i + 1; r.j = l.j + 1; break;
    case Family::F: r.family = Family::E; break;
    case Family::G: r.family = Family::H; r.j = l.j + 1; break;
    case Family::H: r.family = Family::G; r.i = l.i + 1; break;
    case Family::Ky: r.i = l.i + 1; break;
    case Family::Ideal: r.j = l.j + 1; break;
    case Family::Free: break;
  }
  return r;
}

ObjectLabel syzygy_label_power(ObjectLabel l, int n) {
  for (; n > 0; --n) l = syzygy_label(l);
  for (; n < 0; ++n) l = suspend_label(l);
  return l;
}

ObjectLabel twist_label(const ObjectLabel& l, int t) { return l.twisted(t); }

LabelSum normalize_label(const ObjectLabel& l) {
  switch (l.family) {
    case Family::E:
      if (l.j == l.i + 1) {
        LabelSum s(ObjectLabel::one_index(l.ring, Family::A, l.i));
        s.parts.push_back(ObjectLabel::one_index(l.ring, Family::Free, l.i + 1));
        return s;
      }
      break;
    case Family::F:
      if (l.j == l.i + 1) return ObjectLabel::one_index(l.ring, Family::B, l.i + 1);
      break;
    case Family::G:
      if (l.j == l.i + 1) return ObjectLabel::one_index(l.ring, Family::Free, l.i + 1);
      break;
    case Family::H:
      if (l.j == l.i) return ObjectLabel::one_index(l.ring, Family::Free, l.i);
      break;
    default: break;
  }
  return l;
}

LabelSum normalize_label(const LabelSum& l) {
  LabelSum out;
  for (const auto& part : l.parts) {
    LabelSum n = normalize_label(part);
    out.parts.insert(out.parts.end(), n.parts.begin(), n.parts.end());
  }
  return out;
}

}  // namespace mfstab
