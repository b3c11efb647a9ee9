#include "spdg/cipher.hpp"

#include <cmath>
#include <limits>

#include "spdg/common.hpp"

namespace spdg {

namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }

// Histogram of the shift-s decryption: cipher letter c decrypts to
// (c + s) % 26, so index i collects the mass of cipher index (i - s).
std::array<double, 26> decrypted_histogram(const std::array<double, 26>& h, int s) {
  std::array<double, 26> out{};
  for (int i = 0; i < 26; ++i) out[i] = h[(i + 26 - s) % 26];
  return out;
}

}  // namespace

std::string shift_encrypt(std::string_view text, int shift) {
  if (shift < 0 || shift > 25) {
    throw InvalidInputError("shift must be in 0..25");
  }
  std::string out(text);
  for (char& c : out) {
    if (is_upper(c)) {
      c = static_cast<char>('A' + (c - 'A' + 26 - shift) % 26);
    } else if (is_lower(c)) {
      c = static_cast<char>('a' + (c - 'a' + 26 - shift) % 26);
    }
  }
  return out;
}

LetterHistogram letter_histogram(std::string_view text) {
  LetterHistogram h;
  double total = 0.0;
  for (char c : text) {
    int idx = -1;
    if (is_upper(c)) {
      idx = c - 'A';
    } else if (is_lower(c)) {
      idx = c - 'a';
    }
    if (idx >= 0) {
      h.freq[static_cast<std::size_t>(idx)] += 1.0;
      total += 1.0;
    }
  }
  if (total > 0.0) {
    for (double& f : h.freq) f /= total;
  }
  return h;
}

CrackResult crack_shift(std::string_view ciphertext,
                        const LetterHistogram& reference, bool use_kl) {
  const LetterHistogram cipher_hist = letter_histogram(ciphertext);
  double mass = 0.0;
  for (double f : cipher_hist.freq) mass += f;
  if (mass <= 0.0) {
    throw InvalidInputError("ciphertext contains no letters");
  }

  CrackResult result;
  double best = std::numeric_limits<double>::infinity();
  for (int s = 0; s < 26; ++s) {
    const auto candidate = rotate_left(cipher_hist.freq, s);
    double score = 0.0;
    for (int i = 0; i < 26; ++i) {
      const double h = candidate[i];
      const double r = reference.freq[static_cast<std::size_t>(i)];
      if (use_kl) {
        if (h > 0.0) {
          score += r > 0.0 ? h * std::log(h / r)
                           : std::numeric_limits<double>::infinity();
        }
      } else {
        const double d = h - r;
        score += d * d / std::max(r, 1e-12);
      }
    }
    result.scores[static_cast<std::size_t>(s)] = score;
    if (score < best) {
      best = score;
      result.shift = s;
    }
  }
  return result;
}

}  // namespace spdg
