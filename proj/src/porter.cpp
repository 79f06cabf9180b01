#include <string>
#include <string_view>

#include "semsum/rouge.hpp"

namespace semsum {

namespace {

// Direct rendering of the reference C implementation: `b` holds the word,
// `k` is the index of its last letter and `j` marks the stem end after a
// successful ends().
class PorterStemmer {
 public:
  explicit PorterStemmer(std::string_view word)
      : b_(word), k_(static_cast<int>(word.size()) - 1) {}

  std::string run() {
    if (k_ <= 1) return b_;
    step1ab();
    if (k_ > 0) {
      step1c();
      step2();
      step3();
      step4();
      step5();
    }
    return b_.substr(0, static_cast<std::size_t>(k_ + 1));
  }

 private:
  bool cons(int i) const {
    switch (b_[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !cons(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in b[0..j].
  int m() const {
    int n = 0;
    int i = 0;
    for (;;) {
      if (i > j_) return n;
      if (!cons(i)) break;
      ++i;
    }
    ++i;
    for (;;) {
      for (;;) {
        if (i > j_) return n;
        if (cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      for (;;) {
        if (i > j_) return n;
        if (!cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const {
    for (int i = 0; i <= j_; ++i) {
      if (!cons(i)) return true;
    }
    return false;
  }

  bool double_consonant(int j) const {
    if (j < 1) return false;
    if (b_[j] != b_[j - 1]) return false;
    return cons(j);
  }

  bool cvc(int i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    const char ch = b_[i];
    return !(ch == 'w' || ch == 'x' || ch == 'y');
  }

  bool ends(std::string_view s) {
    const int length = static_cast<int>(s.size());
    if (length > k_ + 1) return false;
    if (std::string_view(b_).substr(static_cast<std::size_t>(k_ - length + 1),
                                    s.size()) != s) {
      return false;
    }
    j_ = k_ - length;
    return true;
  }

  void set_to(std::string_view s) {
    b_.replace(static_cast<std::size_t>(j_ + 1), static_cast<std::size_t>(k_ - j_), s);
    k_ = j_ + static_cast<int>(s.size());
  }

  void r(std::string_view s) {
    if (m() > 0) set_to(s);
  }

  void step1ab() {
    if (b_[k_] == 's') {
      if (ends("sses")) {
        k_ -= 2;
      } else if (ends("ies")) {
        set_to("i");
      } else if (b_[k_ - 1] != 's') {
        --k_;
      }
    }
    if (ends("eed")) {
      if (m() > 0) --k_;
    } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
      k_ = j_;
      if (ends("at")) {
        set_to("ate");
      } else if (ends("bl")) {
        set_to("ble");
      } else if (ends("iz")) {
        set_to("ize");
      } else if (double_consonant(k_)) {
        --k_;
        const char ch = b_[k_];
        if (ch == 'l' || ch == 's' || ch == 'z') ++k_;
      } else if (m() == 1 && cvc(k_)) {
        set_to("e");
      }
    }
    b_.resize(static_cast<std::size_t>(k_ + 1));
  }

  void step1c() {
    if (ends("y") && vowel_in_stem()) b_[k_] = 'i';
  }

  // Each table row is (suffix, replacement); the first matching suffix wins
  // even when the measure condition then fails.
  struct Rule {
    std::string_view suffix;
    std::string_view replacement;
  };

  template <std::size_t N>
  void apply_first(const Rule (&rules)[N]) {
    for (const auto& rule : rules) {
      if (ends(rule.suffix)) {
        r(rule.replacement);
        return;
      }
    }
  }

  void step2() {
    if (k_ < 1) return;
    switch (b_[k_ - 1]) {
      case 'a': {
        static constexpr Rule kRules[] = {{"ational", "ate"}, {"tional", "tion"}};
        apply_first(kRules);
        break;
      }
      case 'c': {
        static constexpr Rule kRules[] = {{"enci", "ence"}, {"anci", "ance"}};
        apply_first(kRules);
        break;
      }
      case 'e': {
        static constexpr Rule kRules[] = {{"izer", "ize"}};
        apply_first(kRules);
        break;
      }
      case 'l': {
        static constexpr Rule kRules[] = {{"bli", "ble"}, {"alli", "al"}, {"entli", "ent"},
                                          {"eli", "e"}, {"ousli", "ous"}};
        apply_first(kRules);
        break;
      }
      case 'o': {
        static constexpr Rule kRules[] = {{"ization", "ize"}, {"ation", "ate"},
                                          {"ator", "ate"}};
        apply_first(kRules);
        break;
      }
      case 's': {
        static constexpr Rule kRules[] = {{"alism", "al"}, {"iveness", "ive"},
                                          {"fulness", "ful"}, {"ousness", "ous"}};
        apply_first(kRules);
        break;
      }
      case 't': {
        static constexpr Rule kRules[] = {{"aliti", "al"}, {"iviti", "ive"},
                                          {"biliti", "ble"}};
        apply_first(kRules);
        break;
      }
      case 'g': {
        static constexpr Rule kRules[] = {{"logi", "log"}};
        apply_first(kRules);
        break;
      }
      default:
        break;
    }
  }

  void step3() {
    switch (b_[k_]) {
      case 'e': {
        static constexpr Rule kRules[] = {{"icate", "ic"}, {"ative", ""}, {"alize", "al"}};
        apply_first(kRules);
        break;
      }
      case 'i': {
        static constexpr Rule kRules[] = {{"iciti", "ic"}};
        apply_first(kRules);
        break;
      }
      case 'l': {
        static constexpr Rule kRules[] = {{"ical", "ic"}, {"ful", ""}};
        apply_first(kRules);
        break;
      }
      case 's': {
        static constexpr Rule kRules[] = {{"ness", ""}};
        apply_first(kRules);
        break;
      }
      default:
        break;
    }
  }

  void step4() {
    if (k_ < 1) return;
    bool matched = false;
    switch (b_[k_ - 1]) {
      case 'a': matched = ends("al"); break;
      case 'c': matched = ends("ance") || ends("ence"); break;
      case 'e': matched = ends("er"); break;
      case 'i': matched = ends("ic"); break;
      case 'l': matched = ends("able") || ends("ible"); break;
      case 'n': matched = ends("ant") || ends("ement") || ends("ment") || ends("ent"); break;
      case 'o':
        matched = (ends("ion") && j_ >= 0 && (b_[j_] == 's' || b_[j_] == 't')) ||
                  ends("ou");
        break;
      case 's': matched = ends("ism"); break;
      case 't': matched = ends("ate") || ends("iti"); break;
      case 'u': matched = ends("ous"); break;
      case 'v': matched = ends("ive"); break;
      case 'z': matched = ends("ize"); break;
      default: break;
    }
    if (matched && m() > 1) k_ = j_;
  }

  void step5() {
    j_ = k_;
    if (b_[k_] == 'e') {
      const int a = m();
      if (a > 1 || (a == 1 && !cvc(k_ - 1))) --k_;
    }
    if (b_[k_] == 'l' && double_consonant(k_) && m() > 1) --k_;
  }

  std::string b_;
  int k_;
  int j_ = 0;
};

bool is_lower_ascii_word(std::string_view word) {
  for (char c : word) {
    if (c < 'a' || c > 'z') return false;
  }
  return true;
}

}  // namespace

std::string porter_stem(std::string_view word) {
  if (word.size() <= 2 || !is_lower_ascii_word(word)) return std::string(word);
  return PorterStemmer(word).run();
}

}  // namespace semsum
