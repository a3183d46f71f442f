#include "reciperec/text.hpp"

#include <algorithm>

namespace reciperec::text {

std::vector<std::uint32_t> decode_utf8(std::string_view s) {
  std::vector<std::uint32_t> out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    std::uint32_t cp = 0;
    int extra = 0;
    if (c < 0x80) {
      cp = c;
    } else if ((c & 0xE0) == 0xC0) {
      cp = c & 0x1F;
      extra = 1;
    } else if ((c & 0xF0) == 0xE0) {
      cp = c & 0x0F;
      extra = 2;
    } else if ((c & 0xF8) == 0xF0) {
      cp = c & 0x07;
      extra = 3;
    } else {
      // stray continuation byte: emit replacement and move on
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    if (i + static_cast<std::size_t>(extra) >= s.size()) {
      if (extra > 0) {
        out.push_back(0xFFFD);
        break;
      }
    }
    bool ok = true;
    for (int k = 1; k <= extra; ++k) {
      unsigned char cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (cc & 0x3F);
    }
    if (!ok) {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool is_space(std::uint32_t cp) {
  switch (cp) {
    case 0x09:
    case 0x0A:
    case 0x0B:
    case 0x0C:
    case 0x0D:
    case 0x20:
    case 0x85:
    case 0xA0:
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
      return true;
    default:
      return (cp >= 0x2000 && cp <= 0x200A);
  }
}

bool is_digit(std::uint32_t cp) {
  if (cp >= '0' && cp <= '9') return true;
  if (cp >= 0x0660 && cp <= 0x0669) return true;  // Arabic-Indic
  if (cp >= 0x06F0 && cp <= 0x06F9) return true;  // extended Arabic-Indic
  switch (cp) {                                    // common vulgar fractions
    case 0xBC:
    case 0xBD:
    case 0xBE:
      return true;
    default:
      return (cp >= 0x2150 && cp <= 0x215F);
  }
}

bool is_punct(std::uint32_t cp) {
  if (cp < 0x80) {
    return (cp >= '!' && cp <= '/') || (cp >= ':' && cp <= '@') ||
           (cp >= '[' && cp <= '`') || (cp >= '{' && cp <= '~');
  }
  switch (cp) {
    case 0xA1:   // inverted exclamation
    case 0xBF:   // inverted question
    case 0xAB:   // «
    case 0xBB:   // »
    case 0x60C:  // Arabic comma
    case 0x61B:  // Arabic semicolon
    case 0x61F:  // Arabic question mark
    case 0x6D4:  // Arabic full stop
    case 0x3001:
    case 0x3002:
      return true;
    default:
      // general punctuation block (dashes, quotes, ellipsis)
      return (cp >= 0x2010 && cp <= 0x2027) || (cp >= 0x2030 && cp <= 0x205E);
  }
}

bool is_letter(std::uint32_t cp) {
  if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z')) return true;
  if (cp >= 0xC0 && cp <= 0x24F && cp != 0xD7 && cp != 0xF7) return true;  // Latin ext.
  if (cp >= 0x400 && cp <= 0x4FF) return true;                            // Cyrillic
  if (cp >= 0x600 && cp <= 0x6FF && !is_digit(cp) && !is_punct(cp)) return true;  // Arabic
  if (cp >= 0x750 && cp <= 0x77F) return true;
  return false;
}

std::uint32_t to_lower(std::uint32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 32;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 32;  // Latin-1 capitals
  if (cp >= 0x410 && cp <= 0x42F) return cp + 32;              // Cyrillic А..Я
  if (cp == 0x401) return 0x451;                               // Ё
  return cp;
}

std::string lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::uint32_t cp : decode_utf8(s)) append_utf8(out, to_lower(cp));
  return out;
}

std::string clean_token(std::string_view token) {
  std::vector<std::uint32_t> cps = decode_utf8(token);
  std::size_t b = 0, e = cps.size();
  while (b < e && is_punct(cps[b])) ++b;
  while (e > b && is_punct(cps[e - 1])) --e;
  std::string out;
  for (std::size_t i = b; i < e; ++i) append_utf8(out, to_lower(cps[i]));
  return out;
}

std::vector<std::string> tokenize(std::string_view s) {
  std::vector<std::string> out;
  std::vector<std::uint32_t> cps = decode_utf8(s);
  std::string cur;
  auto flush = [&]() {
    if (!cur.empty()) {
      std::string t = clean_token(cur);
      if (!t.empty()) out.push_back(std::move(t));
      cur.clear();
    }
  };
  for (std::uint32_t cp : cps) {
    if (is_space(cp)) {
      flush();
    } else {
      append_utf8(cur, cp);
    }
  }
  flush();
  return out;
}

bool numeric_token(std::string_view token) {
  bool saw_digit = false;
  for (std::uint32_t cp : decode_utf8(token)) {
    if (is_digit(cp)) {
      saw_digit = true;
    } else if (is_letter(cp)) {
      return false;
    }
  }
  return saw_digit;
}

int levenshtein(std::string_view a, std::string_view b) {
  std::vector<std::uint32_t> x = decode_utf8(a), y = decode_utf8(b);
  if (x.size() < y.size()) std::swap(x, y);
  std::vector<int> prev(y.size() + 1), cur(y.size() + 1);
  for (std::size_t j = 0; j <= y.size(); ++j) prev[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= x.size(); ++i) {
    cur[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= y.size(); ++j) {
      int sub = prev[j - 1] + (x[i - 1] == y[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[y.size()];
}

std::vector<std::string> char_ngrams(std::string_view token, int nmin, int nmax) {
  std::vector<std::uint32_t> cps;
  cps.push_back('<');
  for (std::uint32_t cp : decode_utf8(token)) cps.push_back(cp);
  cps.push_back('>');

  std::vector<std::string> out;
  const int n = static_cast<int>(cps.size());
  for (int len = nmin; len <= nmax; ++len) {
    if (len > n) break;
    for (int start = 0; start + len <= n; ++start) {
      std::string g;
      for (int k = 0; k < len; ++k) append_utf8(g, cps[start + k]);
      out.push_back(std::move(g));
    }
  }
  // the whole marked token is always a unit, so even 1-char tokens get one
  if (n < nmin || n > nmax) {
    std::string whole;
    for (std::uint32_t cp : cps) append_utf8(whole, cp);
    out.push_back(std::move(whole));
  }
  return out;
}

std::vector<std::string> split_sentences(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (std::uint32_t cp : decode_utf8(s)) {
    if (cp == '.' || cp == '!' || cp == '?' || cp == 0x61F || cp == 0x6D4 ||
        cp == 0x3002 || cp == '\n') {
      if (!cur.empty()) {
        out.push_back(cur);
        cur.clear();
      }
    } else {
      append_utf8(cur, cp);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

bool contains(std::string_view haystack, std::string_view needle) {
  return haystack.find(needle) != std::string_view::npos;
}

}  // namespace reciperec::text
