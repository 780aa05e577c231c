#include <algorithm>

#include "leibniz/family.hpp"

namespace leibniz {

namespace {

struct Entry {
  int group;
  int item;
  std::string_view matrix;
  std::vector<std::string_view> conditions;
};

// Rows are N(e); N(f); N(g). Entries use the expression grammar; s is the
// nonnegative root of 1 - 4*alpha on A7 and of 1 + 4*alpha on A11.
const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {1, 1, "k1,0,0;0,k1,l3;0,0,p3", {}},
      {1, 2, "k1,0,0;l1,l2,(k1-l2)^2/(2*l1);0,0,k1", {"l1 != 0"}},
      // printed as p2^2/(2*p1) - k1, which leaves the residual 4*k1*p1
      {1, 3, "k1,0,0;0,k1,0;p1,p2,p2^2/(2*p1)+k1", {"p1 != 0"}},
      {1, 4, "-p2*l1/p1+l2,0,0;l1,l2,p2^2*l1/(2*p1^2);p1,p2,p2*(p2-2*l1)/(2*p1)+l2", {"p1 != 0", "l1 != 0"}},

      {2, 1, "k1,0,0;0,k1,0;p1,p2,k1", {}},
      // printed third row (l2-k1, 0, l2) leaves 2*(k1-l2)^2
      {2, 2, "k1,0,0;0,l2,0;k1-l2,p2,l2", {"l2 != k1"}},
      {2, 3, "2*k2+l2,k2,0;-k2,l2,0;p1,p2,k2+l2", {"k2 != 0"}},
      {2, 4, "k1,k2,0;0,l2,0;k1-l2,p2,l2", {"k2 != 0"}},

      {3, 1, "k1,0,0;l1,l2,0;p1,p2,k1", {}},
      {3, 2, "k1,0,0;0,l2,l3;0,p2,k1", {"l3 != 0"}},
      {3, 3, "k1,0,0;0,l2,l3;0,p2,p3", {"p3 != k1"}},
      {3, 4, "k1,k2,0;0,l2,0;0,p2,l2", {"k2 != 0"}},

      {4, 1, "k1,0,0;l1,l2,0;p1,p2,k1", {}},
      {4, 2, "k1,k2,0;0,k1,0;p1,p2,k1", {"k2 != 0"}},

      {5, 1, "k1,0,0;l1,k1,0;p1,0,k1", {}},

      {6, 1, "k1,0,0;l1,l2,l2-k1;p1,p3-k1,p3", {}},
      {6, 2, "k1,0,0;l1,k1,0;p1,k1-p3,p3", {"p3 != k1"}},
      {6, 3, "k1,0,0;l1,l2,k1-l2;p1,k1-p3,p3", {"l2 != k1"}},

      {7, 1, "k1,0,0;l1,k1,0;p1,0,k1", {"alpha > 1/4"}},
      {7, 2, "k1,0,0;l1,k1,0;p1,(-1-s)/2*(p3-k1),p3", {"alpha <= 1/4", "alpha != 0"}},
      {7, 3, "k1,0,0;l1,k1,0;p1,(-1+s)/2*(p3-k1),p3", {"alpha < 1/4", "alpha != 0", "p3 != k1"}},
      {7, 4, "l2+(1+s)/2*l3,0,0;l1,l2,l3;p1,(1+s)/2*(l2+(1+s)/2*l3-p3),p3", {"alpha <= 1/4", "alpha != 0", "l3 != 0"}},
      {7, 5, "l2+(1-s)/2*l3,0,0;l1,l2,l3;p1,(1-s)/2*(l2+(1-s)/2*l3-p3),p3", {"alpha < 1/4", "alpha != 0", "l3 != 0"}},

      {8, 1, "k1,0,0;l1,l2,0;p1,p2,k1", {"p2 != 0"}},
      {8, 2, "k1,0,0;l1,l2,0;p1,0,k1", {"l2 != k1"}},
      {8, 3, "k1,0,0;l1,k1,l3;p1,0,p3", {}},

      {9, 1, "k1,0,0;0,k1,0;p1,p2,k1", {}},
      {9, 2, "k1,0,0;l1,k1-l1,0;p1,-p1,k1-l1", {"l1 != 0"}},
      {9, 3, "k1,0,0;l1,k1+l1,0;p1,p1,k1+l1", {"l1 != 0"}},
      {9, 4, "k1,0,0;0,k1,0;0,0,p3", {"p3 != k1"}},
      {9, 5, "k1,k2,0;k2,k1,0;0,0,p3", {"k2 != 0"}},
      {9, 6, "k1,k2,0;k2,k1,0;p1,p1,k1+k2", {"k2 != 0", "p1 != 0"}},
      {9, 7, "k1,k2,0;k2,k1,0;p1,-p1,k1-k2", {"k2 != 0", "p1 != 0"}},
      {9, 8, "k1,k2,0;k1-l2+k2,l2,0;p1,-p1,l2-k2", {"k2 != 0", "k1 != l2"}},
      // printed (3,3) entry k1+l2 leaves (k1-k2)*(k1-l2)
      {9, 9, "k1,k2,0;l2-k1+k2,l2,0;p1,p1,k2+l2", {"k2 != 0", "k1 != l2"}},

      {10, 1, "k1,0,0;0,k1,0;p1,p2,k1", {}},
      {10, 2, "k1,0,0;0,k1,0;0,0,p3", {"p3 != k1"}},
      {10, 3, "k1,k2,0;-k2,k1,0;0,0,p3", {"k2 != 0"}},

      {11, 1, "k1,0,0;0,k1,0;p1,0,k1", {"p1 != 0"}},
      {11, 2, "k1,k2,0;0,k1+(1+s)/2*k2,0;0,0,k1", {"k2 != 0", "alpha >= -1/4", "alpha != 0"}},
      {11, 3, "k1,k2,0;0,k1+(1-s)/2*k2,0;0,0,k1", {"k2 != 0", "alpha > -1/4", "alpha != 0"}},
      {11, 4, "k1,0,0;0,k1,0;0,0,p3", {}},
      {11, 5, "k1,k2,0;alpha*k2,k1+k2,0;0,0,p3", {"alpha != 0"}},
      {11, 6, "k1,k2,0;(-1+s)/2*(p3-k1),(1-s)/2*k2+p3,0;0,0,p3",
       {"k2 != (-1+s)/(2*alpha)*(p3-k1)", "p3 != k1", "alpha > -1/4", "alpha != 0"}},
      {11, 7, "k1,k2,0;(-1-s)/2*(p3-k1),(1+s)/2*k2+p3,0;0,0,p3",
       {"k2 != (-1-s)/(2*alpha)*(p3-k1)", "p3 != k1", "alpha >= -1/4", "alpha != 0"}},
      {11, 8, "k1,0,0;0,k1,0;p1,p2,k1", {"p2 != 0", "alpha < -1/4"}},
      {11, 9, "k1,0,0;0,k1,0;p1,p2,k1", {"p2 != 0", "alpha >= -1/4", "p1 != (-1+s)/2*p2", "p1 != (-1-s)/2*p2"}},
      {11, 10, "k1,(1-s)/(2*alpha)*(k1-l2)+(1-s)^2/(4*alpha^2)*l1,0;l1,l2,0;(-1-s)/2*p2,p2,k1+(1-s)/(2*alpha)*l1",
       {"p2 != 0", "alpha != 0", "alpha >= -1/4"}},
      {11, 11, "k1,(1+s)/(2*alpha)*(k1-l2)+(1+s)^2/(4*alpha^2)*l1,0;l1,l2,0;(-1+s)/2*p2,p2,k1+(1+s)/(2*alpha)*l1",
       {"p2 != 0", "alpha != 0", "alpha > -1/4"}},

      {12, 1, "k1,k2,0;0,k1,0;p1,p2,k1", {}},

      {13, 1, "k1,k2,0;l1,l2,0;0,0,p3", {}},
      {13, 2, "k1,k2,0;0,l2,0;0,p2,l2", {"p2 != 0"}},
      {13, 3, "k1,p2^2*l1/p1^2+p2*k1/p1-p2*l2/p1,0;l1,l2,0;p1,p2,p2*l1/p1+k1", {"p1 != 0"}},
  };
  return list;
}

std::vector<Family> build() {
  std::vector<Family> out;
  for (const auto& e : entries()) {
    out.push_back(make_family(FamilyId{e.group, e.item}, "A" + std::to_string(e.group), e.matrix, e.conditions));
  }
  std::sort(out.begin(), out.end(), [](const Family& a, const Family& b) { return a.id < b.id; });
  return out;
}

}  // namespace

const std::vector<Family>& family_catalog() {
  static const std::vector<Family> families = build();
  return families;
}

const std::vector<UncorrectedFamily>& uncorrected_families() {
  static const std::vector<UncorrectedFamily> list = {
      {make_family({1, 3}, "A1", "k1,0,0;0,k1,0;p1,p2,p2^2/(2*p1)-k1", {"p1 != 0"}),
       "entry (3,3): -k1 replaced by +k1"},
      {make_family({2, 2}, "A2", "k1,0,0;0,l2,0;l2-k1,0,l2", {"l2 != k1"}),
       "row 3: (l2-k1, 0, l2) replaced by (k1-l2, p2, l2)"},
      {make_family({9, 9}, "A9", "k1,k2,0;l2-k1+k2,l2,0;p1,p1,k1+l2", {"k2 != 0", "k1 != l2"}),
       "entry (3,3): k1+l2 replaced by k2+l2"},
  };
  return list;
}

}  // namespace leibniz
