#include "oseq/sequence_io.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <stdexcept>

#include "json.hpp"

namespace oseq {

std::string format_sequence_line(const Sequence& s) {
  if (s.symbols.empty()) throw std::invalid_argument("empty sequence");
  std::string out;
  if (s.k <= 10) {
    out.reserve(s.symbols.size());
    for (symbol_t v : s.symbols) out.push_back(static_cast<char>('0' + v));
  } else {
    for (std::size_t i = 0; i < s.symbols.size(); ++i) {
      if (i) out.push_back(',');
      out += std::to_string(s.symbols[i]);
    }
  }
  return out;
}

Sequence parse_sequence_line(std::string_view text, int k, int order) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw std::invalid_argument("empty sequence file");
  if (k < 2) throw std::invalid_argument("alphabet size must be >= 2");

  Sequence s;
  s.k = k;
  s.order = order;
  if (k <= 10) {
    s.symbols.reserve(text.size());
    for (char c : text) {
      if (c < '0' || c > '9' || c - '0' >= k) {
        throw std::invalid_argument(std::string("symbol '") + c +
                                    "' out of range for k=" + std::to_string(k));
      }
      s.symbols.push_back(static_cast<symbol_t>(c - '0'));
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t next = std::min(text.find(',', pos), text.size());
      int value = -1;
      const auto res =
          std::from_chars(text.data() + pos, text.data() + next, value);
      if (res.ec != std::errc{} || res.ptr != text.data() + next || value < 0 ||
          value >= k) {
        throw std::invalid_argument(
            "symbol '" + std::string(text.substr(pos, next - pos)) +
            "' out of range for k=" + std::to_string(k));
      }
      s.symbols.push_back(static_cast<symbol_t>(value));
      if (next == text.size()) break;
      pos = next + 1;
    }
  }
  return s;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw std::runtime_error("sha256 digest failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

std::string manifest_json(const std::string& kind, const Sequence& s,
                          const std::string& line) {
  nlohmann::json j;
  j["kind"] = kind;
  j["k"] = s.k;
  j["order"] = s.order;
  j["period"] = s.period();
  j["sha256"] = sha256_hex(line);
  return j.dump(2) + "\n";
}

}  // namespace oseq
