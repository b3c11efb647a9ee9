#ifndef SPDG_CIPHER_HPP
#define SPDG_CIPHER_HPP

#include <array>
#include <string>
#include <string_view>

namespace spdg {

// Relative frequencies over A-Z, case-folded; non-letters are ignored.
// All-zero is the histogram of letterless text.
struct LetterHistogram {
  std::array<double, 26> freq{};
};

// Caesar shift "up": each letter is replaced by the letter `shift` positions
// earlier in the alphabet, modulo 26 (T -> Q under shift 3). Case is kept,
// non-letters pass through. Decrypt with shift (26 - s) % 26.
std::string shift_encrypt(std::string_view text, int shift);

LetterHistogram letter_histogram(std::string_view text);

struct CrackResult {
  int shift = 0;
  std::array<double, 26> scores{};  // distance per candidate shift
};

// Scores every candidate shift by the distance between the decrypted
// histogram and the reference, returning the argmin (ties to the smaller
// shift). Chi-squared distance by default, KL divergence with use_kl.
CrackResult crack_shift(std::string_view ciphertext,
                        const LetterHistogram& reference, bool use_kl = false);

}  // namespace spdg

#endif
