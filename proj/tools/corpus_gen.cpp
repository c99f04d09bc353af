// Generates the bundled diagram corpus (data/corpus.tsv) from braid-word
// constructions, validating every entry against the bracket oracle before it
// is written.  Regenerate with:  corpus_gen > data/corpus.tsv
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "khoreo/bracket.hpp"
#include "khoreo/braid.hpp"
#include "khoreo/faces.hpp"
#include "khoreo/goeritz.hpp"

using namespace khoreo;

namespace {

// Menasco: an alternating diagram is prime iff no pair of arcs disconnects
// the underlying 4-valent graph.
bool diagram_prime(const Diagram& d) {
  int c = d.crossing_count();
  if (c <= 2) return true;
  for (ArcId a = 1; a <= d.arc_count(); ++a)
    for (ArcId b = a + 1; b <= d.arc_count(); ++b) {
      std::vector<bool> vis(c, false);
      std::vector<int> stack{0};
      vis[0] = true;
      int seen = 1;
      while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int k = 0; k < 4; ++k) {
          ArcId arc = d.crossing(i).a[k];
          if (arc == a || arc == b) continue;
          for (auto& [cj, pj] : d.arc_ends(arc))
            if (!vis[cj]) {
              vis[cj] = true;
              ++seen;
              stack.push_back(cj);
            }
        }
      }
      if (seen != c) return false;
    }
  return true;
}

struct Entry {
  std::string name;
  Diagram d;
};

std::string word_name(int strands, const std::vector<int>& word) {
  std::string s = "br" + std::to_string(strands) + "_";
  for (int w : word) {
    char base = char('a' + std::abs(w) - 1);
    s += (w > 0) ? base : char(std::toupper(base));
  }
  return s;
}

class Corpus {
 public:
  void add(const std::string& name, Diagram d, bool require_prime_knot) {
    auto flags = classify(d);
    if (!flags.nonsplit && d.crossing_count() > 0) return;
    if (!flags.reduced) return;
    int n = d.component_count();
    int c = d.crossing_count();
    if (n == 1 && c > 9) return;
    if (n > 1 && (c > 8 || n > 3)) return;
    if (require_prime_knot && n == 1 && !diagram_prime(d)) return;

    // dedupe by the pair (components, Khovanov polynomial)
    std::string key = std::to_string(n) + "|" +
                      kh_polynomial(homology_table(d, khovanov_frobenius())).str();
    if (!seen_.insert(key).second) return;

    if (!verify_jones(d)) {
      std::cerr << "REJECT (jones mismatch!): " << name << "\n";
      return;
    }
    entries_.push_back({name, std::move(d)});
  }

  void emit(std::ostream& os) const {
    std::vector<const Entry*> sorted;
    for (const auto& e : entries_) sorted.push_back(&e);
    std::stable_sort(sorted.begin(), sorted.end(), [](const Entry* a, const Entry* b) {
      auto ka = std::make_tuple(a->d.crossing_count(), a->d.component_count(), a->name);
      auto kb = std::make_tuple(b->d.crossing_count(), b->d.component_count(), b->name);
      return ka < kb;
    });
    for (const Entry* e : sorted) os << e->name << "\t" << e->d.pd_text() << "\n";

    int knots = 0, links = 0, alternating = 0;
    for (const Entry* e : sorted) {
      (e->d.component_count() == 1 ? knots : links)++;
      if (classify(e->d).alternating) alternating++;
    }
    std::cerr << "corpus: " << sorted.size() << " entries (" << knots << " knots, " << links
              << " links, " << alternating << " alternating)\n";
  }

 private:
  std::set<std::string> seen_;
  std::vector<Entry> entries_;
};

// All alternating 3-braid words: blocks s1^{+a1} s2^{-b1} s1^{+a2} ...
void enumerate_alternating_3braids(Corpus& corpus, int max_crossings) {
  // compositions (a1, b1, a2, b2, ...) with up to 4 blocks per generator
  std::vector<std::vector<int>> stack{{}};
  while (!stack.empty()) {
    std::vector<int> blocks = stack.back();
    stack.pop_back();
    int total = 0;
    for (int b : blocks) total += b;
    if (blocks.size() >= 2 && blocks.size() % 2 == 0) {
      std::vector<int> word;
      for (std::size_t i = 0; i < blocks.size(); ++i)
        for (int k = 0; k < blocks[i]; ++k) word.push_back(i % 2 == 0 ? 1 : -2);
      corpus.add(word_name(3, word), braid_closure(3, word), true);
    }
    if (blocks.size() == 8) continue;
    for (int next = 1; total + next <= max_crossings; ++next) {
      auto ext = blocks;
      ext.push_back(next);
      stack.push_back(ext);
    }
  }
}

}  // namespace

int main() {
  Corpus corpus;

  corpus.add("unknot", Diagram::parse("PD[U]"), false);
  corpus.add("trefoil", Diagram::parse("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]"), false);
  corpus.add("figure8", braid_closure(3, {1, -2, 1, -2}), false);
  corpus.add("hopf_pos", Diagram::parse("PD[X[1,3,2,4],X[3,1,4,2]]"), false);
  corpus.add("hopf_neg", Diagram::parse("PD[X[4,1,3,2],X[2,3,1,4]]"), false);
  corpus.add("borromean", braid_closure(3, {1, -2, 1, -2, 1, -2}), false);
  corpus.add("chain3", braid_closure(3, {1, 1, -2, -2}), false);

  // torus family, both chiralities for the smallest
  for (int n = 3; n <= 9; ++n)
    corpus.add("t2_" + std::to_string(n), braid_closure(2, std::vector<int>(n, 1)), false);
  corpus.add("t2_5m", braid_closure(2, std::vector<int>(5, -1)), false);

  // nonalternating torus knot and friends
  corpus.add("t3_4", braid_closure(3, {1, 2, 1, 2, 1, 2, 1, 2}), false);
  corpus.add("t3_2x", braid_closure(3, {1, 2, 1, 2, 1, 2}), false);
  for (auto& word : std::vector<std::vector<int>>{
           {1, 2, 1, 2, 1, 2, 1, 2, 1},  // 9-crossing positive braid
           {1, 1, 1, 2, -1, 2},          // a twisted nonalternating candidate
           {1, 1, 2, 2, 1, 1, 2, 2},
       })
    corpus.add(word_name(3, word), braid_closure(3, word), false);

  enumerate_alternating_3braids(corpus, 9);

  // alternating 4-braid samples; odd lengths supply the 9-crossing knots a
  // 3-braid alternating word cannot reach
  for (auto& word : std::vector<std::vector<int>>{
           {1, -2, 3, 1, -2, 3},
           {1, -2, 3, -2, 1, -2, 3, -2},
           {1, 1, -2, 3, 3, -2},
           {1, -2, -2, 3, 1, -2, -2, 3},
           {1, 3, -2, 1, 3, -2},
           {1, 1, -2, -2, 3, 3},
           {1, -2, 1, 3, -2, 3},
           {1, -2, 1, -2, 3, -2, 3, -2},
           {1, -2, 3, 1, -2, 3, 1, -2, 3},
           {1, 1, -2, 3, -2, 1, -2, 3, -2},
           {1, -2, 1, -2, 1, -2, 3, -2, 3},
           {1, 1, 1, -2, 3, 3, 3, -2, -2},
           {1, -2, 1, -2, 3, 1, -2, 3, -2},
           {1, 1, -2, -2, 3, 1, -2, 3, -2},
           {1, -2, -2, 1, -2, 3, 3, -2, 1},
           {1, 1, -2, 1, -2, 3, -2, 3, -2},
       })
    corpus.add(word_name(4, word), braid_closure(4, word), true);

  corpus.emit(std::cout);
  return 0;
}
