#pragma once

#include "gmotzkin/labeled.hpp"
#include "gmotzkin/report.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gm {

enum class BijectionId {
  phi, tau, tau_bar, varphi, varphi_bar, hat_varphi, hat_varphi_inv, theta, chi1, chi2, chi2_inv, rho,
};

const std::vector<std::pair<std::string, BijectionId>>& bijection_names();
std::optional<BijectionId> bijection_by_name(const std::string& name);
std::string bijection_name(BijectionId id);

class DomainViolation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Which labels a step may carry, and how the size parameter n is measured.
enum class LabelRule {
  Plain,     // no labels
  HTwo,      // every h is h1 or h2
  DTwo,      // every d is d1 or d2
  Matching,  // every d and v is labeled 1 or 2
  LhForm,    // high h is h1 or h2, level-0 h is h1
  LvuForm,   // each v directly followed by u is v1 or v2
  DyckTwo,   // u and d only, d is d1 or d2
  DyckHat,   // u and d only, d is dy or d1, and dy, d1 or d2 after a u
  HatD,      // every d is dy
};
enum class Measure { XLength, UPlusH, Semilength };

struct Form {
  LabelRule rule;
  Measure measure;
  bool operator==(const Form&) const = default;
};

unsigned measure(const LPath& p, Measure m);
// Valid underlying path and every label allowed by the rule.
bool in_form(const LPath& p, LabelRule rule);
// Every labeled path of the form with size n, in enumeration order of the
// underlying paths and then lexicographic label choice.
std::vector<LPath> enumerate_form(Form f, unsigned n);

Form domain_form(BijectionId id);
Form codomain_form(BijectionId id);

// Paths of the domain on which the map is not defined (the exceptional set).
bool is_exceptional(BijectionId id, const LPath& p);

// Throws DomainViolation when p is outside the domain or exceptional.
LPath apply_bijection(BijectionId id, const LPath& p);

// Exhaustive certification at size n. chi2_inv and hat_varphi_inv certify
// the same pair as chi2 and hat_varphi.
Report check_bijection(BijectionId id, unsigned n, unsigned threads = 1);

}
