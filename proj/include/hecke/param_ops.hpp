#ifndef HECKE_PARAM_OPS_HPP
#define HECKE_PARAM_OPS_HPP

/*
  The parameter layer: quadruples (u, P, c, L) where u is a compact extended
  point of an ambient datum, P labels a cuspidal parabolic inside the graded
  algebra attached at u, c is an opaque cuspidal label carrying only its
  dualized flag, and L is a finite dimensional module of the attached algebra
  with r = -1.

  Six operations act on parameters. Per generator map beta on the attached
  algebra:

      AZ':   u fixed,   c fixed,    beta = az
      FT':   u inverted, c fixed,   beta = ft
      D':    u fixed,   c dualized, beta = d (weights fixed; antilinear)
      C':    u inverted, c dualized, beta = c_map   (blocked on triality data)
      tauC': u fixed,   c fixed,    beta = d o c_map
      cin':  u inverted, c fixed,   beta = id

  P is fixed by all six. Parameter equality is support equality plus module
  class equality up to conjugation by Weyl elements of the attached algebra
  that carry one label set onto the other (all parabolics over a common Levi
  are conjugate; these elements fix u by construction). The module class is
  decided by the weight multiset and its reconstruction. Comparisons are up
  to Weyl and torus conjugacy only.

  The sign rule: the attached central torus of a support with label P has
  dimension d = dim E^{W_P} = dim - |P|, and the class level dual scales by
  (-1)^d.
*/

#include <string>
#include <vector>

#include "hecke/graded_hecke.hpp"
#include "hecke/modules_graded.hpp"
#include "hecke/reduction.hpp"
#include "hecke/torus.hpp"

namespace hecke {

struct CuspidalLabel {
  std::string id;
  bool dualized = false;
  bool operator==(const CuspidalLabel& o) const {
    return id == o.id && dualized == o.dualized;
  }
};

struct GeometricSupport {
  ThetaModel model;    // ambient datum; order 1 means no pinned automorphism
  ExtElt u;            // compact extended point of the model torus
  std::vector<int> P;  // subset of the attached algebra's simple labels
  CuspidalLabel c;
  GradedHecke algebra;  // presentation attached to (u, P, c)
};

struct GeometricParameter {
  GeometricSupport support;
  GradedModule module;  // r_scalar = -1, rational weights
};

enum class ParamOp { AZp, FTp, Dp, Cp, TauCp, Cinp };
const char* param_op_name(ParamOp op);
ParamOp param_op_from_name(const std::string& name);

// inverse in T x <theta>
ExtElt ext_inverse(const ThetaModel& m, const ExtElt& a);

// theta of order three acting nontrivially: the quadratic relation between
// C and the dual datum is unavailable there
bool support_is_triality(const GeometricSupport& s);

void validate_parameter(const GeometricParameter& p);

GeometricParameter apply_operation(const GeometricParameter& p, ParamOp which);

int support_central_dim(const GeometricSupport& s);  // dim E^{W_P}
long az_sign(const GeometricSupport& s, int d);
long az_sign(const GeometricSupport& s);

bool param_equal(const GeometricParameter& a, const GeometricParameter& b,
                 std::string* diag = nullptr);

struct DualityReport {
  bool gen_ok = false;         // generator level: az = d o c o ft
  bool param_ok = false;       // AZ' = cin' o tauC' o FT'
  bool nontriality_ok = false; // AZ' = D' o C' o FT', true when skipped
  bool skipped_c = false;
  bool ok = false;
  std::string detail;
};

DualityReport verify_duality_identities(const GeometricParameter& p);

}  // namespace hecke

#endif
