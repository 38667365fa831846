#include "pentail/prime_implicants.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>

#include "pentail/semantics.hpp"
#include "truth_table.hpp"

namespace pentail {

namespace {

// Canonical presentation: ascending size, ties by printed form.
void sort_canonically(std::vector<LiteralSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](const LiteralSet& a, const LiteralSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.to_string() < b.to_string();
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

struct Candidate {
  std::uint32_t atom_mask;
  std::uint32_t pol_mask;  // subset of atom_mask; set bit = positive literal
};

// Finds every inclusion-minimal candidate (atom_mask, pol_mask) whose
// extending table models are non-empty and all flagged. Searches breadth-first
// by candidate size; accepted sets block every later superset, so results are
// minimal by construction. Polarity availability masks restrict the literal
// vocabulary (used for abduction; full masks for plain implicant search).
std::vector<Candidate> enumerate_minimal(const detail::GammaTable& table,
                                         std::uint32_t allowed_atoms, std::uint32_t pos_avail,
                                         std::uint32_t neg_avail) {
  std::vector<Candidate> found;
  if (table.model_bits.empty()) return found;  // nothing extends anything

  bool any_flagged = false;
  bool all_flagged = true;
  for (char flag : table.satisfies_p) {
    if (flag) {
      any_flagged = true;
    } else {
      all_flagged = false;
    }
  }
  if (!any_flagged) return found;                    // no candidate can succeed
  if (all_flagged) return {{0u, 0u}};                // the empty set already does

  const std::size_t n = table.universe->size();
  // Bucket atom masks by size for the breadth-first sweep.
  std::vector<std::vector<std::uint32_t>> masks_by_size(n + 1);
  const std::uint32_t full = n >= 32 ? ~0u : (std::uint32_t{1} << n) - 1;
  for (std::uint32_t m = 0; m <= full; ++m) {
    if ((m & allowed_atoms) != m) continue;
    masks_by_size[static_cast<std::size_t>(std::popcount(m))].push_back(m);
    if (m == full) break;  // avoid wrap when n == 32
  }

  for (std::size_t size = 1; size <= n; ++size) {
    for (std::uint32_t am : masks_by_size[size]) {
      // Enumerate polarity choices: submask `pm` of `am` marks positives.
      std::uint32_t pm = am;
      while (true) {
        const std::uint32_t negatives = am & ~pm;
        const bool available = (pm & ~pos_avail) == 0 && (negatives & ~neg_avail) == 0;
        if (available) {
          bool subsumed = false;
          for (const Candidate& f : found) {
            if ((am & f.atom_mask) == f.atom_mask && (pm & f.atom_mask) == f.pol_mask) {
              subsumed = true;
              break;
            }
          }
          if (!subsumed) {
            bool any_extending = false;
            bool all_satisfy = true;
            for (std::size_t i = 0; i < table.model_bits.size(); ++i) {
              if ((table.model_bits[i] & am) != pm) continue;
              any_extending = true;
              if (!table.satisfies_p[i]) {
                all_satisfy = false;
                break;
              }
            }
            if (any_extending && all_satisfy) found.push_back({am, pm});
          }
        }
        if (pm == 0) break;
        pm = (pm - 1) & am;
      }
    }
  }
  return found;
}

LiteralSet candidate_to_literals(const Candidate& c, const std::vector<AtomId>& universe) {
  std::vector<Literal> literals;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    const std::uint32_t bit = std::uint32_t{1} << i;
    if (c.atom_mask & bit) literals.emplace_back(universe[i], (c.pol_mask & bit) != 0);
  }
  return LiteralSet(std::move(literals));
}

}  // namespace

PrimeImplicantSet::PrimeImplicantSet(std::vector<LiteralSet> implicants,
                                     std::vector<AtomId> theory_atoms,
                                     std::vector<AtomId> formula_atoms)
    : implicants_(std::move(implicants)),
      theory_atoms_(std::move(theory_atoms)),
      formula_atoms_(std::move(formula_atoms)) {
  sort_canonically(implicants_);
}

bool PrimeImplicantSet::contains(const LiteralSet& pi) const {
  return std::find(implicants_.begin(), implicants_.end(), pi) != implicants_.end();
}

std::string PrimeImplicantSet::to_text() const {
  std::string out;
  for (const LiteralSet& pi : implicants_) {
    out += pi.to_string();
    out += '\n';
  }
  return out;
}

HypothesisSet::HypothesisSet(std::vector<Literal> literals) : literals_(std::move(literals)) {
  std::sort(literals_.begin(), literals_.end());
  literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
}

bool HypothesisSet::contains(const Literal& l) const {
  return std::binary_search(literals_.begin(), literals_.end(), l);
}

PrimeImplicantSet prime_implicants(const Theory& gamma, const Formula& p) {
  detail::GammaTable table = detail::build_gamma_table(gamma, p);
  const std::uint32_t full =
      table.universe->size() >= 32 ? ~0u : (std::uint32_t{1} << table.universe->size()) - 1;
  std::vector<Candidate> found = enumerate_minimal(table, full, full, full);

  std::vector<LiteralSet> implicants;
  implicants.reserve(found.size());
  for (const Candidate& c : found) implicants.push_back(candidate_to_literals(c, *table.universe));
  return PrimeImplicantSet(std::move(implicants), atoms(gamma), atoms(p));
}

bool is_prime_implicant(const Theory& gamma, const Formula& p, const LiteralSet& pi) {
  Theory extended = gamma.extended(pi);
  if (!is_consistent(extended)) return false;
  if (!entails(extended, p)) return false;
  // Entailment only grows with the premise set, so minimality needs just the
  // one-literal-removed subsets.
  for (const Literal& l : pi.literals()) {
    if (entails(gamma.extended(pi.without(l)), p)) return false;
  }
  return true;
}

bool literal_in_some_pi(const Theory& gamma, const Formula& p, const Literal& l) {
  PrimeImplicantSet set = prime_implicants(gamma, p);
  for (const LiteralSet& pi : set.implicants()) {
    if (pi.contains(l)) return true;
  }
  return false;
}

bool literal_in_all_pi(const Theory& gamma, const Formula& p, const Literal& l) {
  PrimeImplicantSet set = prime_implicants(gamma, p);
  if (set.empty()) return false;
  for (const LiteralSet& pi : set.implicants()) {
    if (!pi.contains(l)) return false;
  }
  return true;
}

std::vector<LiteralSet> abductive_explanations(const Theory& gamma, const Formula& f,
                                               const HypothesisSet& h) {
  std::vector<AtomId> h_atoms;
  for (const Literal& l : h.literals()) h_atoms.push_back(l.atom());
  h_atoms = detail::sorted_unique(std::move(h_atoms));

  std::vector<AtomId> universe =
      atoms_union(atoms_union(atoms(gamma), atoms(f)), h_atoms);
  detail::check_universe_size(universe.size());

  // The implicant table over the combined universe; availability masks then
  // restrict candidates to the hypothesis vocabulary.
  detail::GammaTable ht = detail::build_gamma_table(
      gamma, f, std::make_shared<const std::vector<AtomId>>(universe));

  std::uint32_t allowed = 0, pos_avail = 0, neg_avail = 0;
  for (const Literal& l : h.literals()) {
    int index = detail::index_in(universe, l.atom());
    const std::uint32_t bit = std::uint32_t{1} << index;
    allowed |= bit;
    if (l.is_positive()) {
      pos_avail |= bit;
    } else {
      neg_avail |= bit;
    }
  }

  std::vector<Candidate> found = enumerate_minimal(ht, allowed, pos_avail, neg_avail);
  std::vector<LiteralSet> out;
  out.reserve(found.size());
  for (const Candidate& c : found) out.push_back(candidate_to_literals(c, universe));
  sort_canonically(out);
  return out;
}

}  // namespace pentail
