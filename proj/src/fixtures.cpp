#include "linepencils/fixtures.hpp"

#include <array>

#include "linepencils/errors.hpp"

namespace linepencils {
namespace fixtures {

LineCombinatorics ceva() {
  return validate(6, {{1, 2, 3}, {1, 5, 6}, {2, 4, 6}, {3, 4, 5}});
}

LineCombinatorics generalized_ceva() {
  // ceva plus the three lines joining its double points {1,4}, {2,5}, {3,6}:
  // l7 through {1,4} and {2,5}, l8 through {1,4} and {3,6}, l9 through
  // {2,5} and {3,6}; the doubles grow into quadruple points
  return validate(9, {{1, 2, 3},
                      {1, 5, 6},
                      {2, 4, 6},
                      {3, 4, 5},
                      {1, 4, 7, 8},
                      {2, 5, 7, 9},
                      {3, 6, 8, 9}});
}

LineCombinatorics ten_line_example() {
  return validate(10, {{1, 6, 7},
                       {1, 8, 9},
                       {2, 9, 10},
                       {2, 7, 8},
                       {3, 6, 8},
                       {3, 7, 10},
                       {4, 6, 10},
                       {4, 7, 9},
                       {5, 8, 10},
                       {5, 6, 9},
                       {1, 2, 3, 4, 5}});
}

LineCombinatorics pencil_of_lines(int k) {
  if (k < 3) throw Error(ErrorCode::ValidationError, "pencil_of_lines needs k >= 3");
  LineSet p;
  for (int i = 1; i <= k; ++i) p.push_back(i);
  return validate(k, {p});
}

namespace {

struct FieldTable {
  int q;
  std::array<std::array<int, 5>, 5> add{}, mul{};
};

FieldTable field_table(int q) {
  FieldTable f;
  f.q = q;
  if (q == 2 || q == 3 || q == 5) {
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        f.add[a][b] = (a + b) % q;
        f.mul[a][b] = (a * b) % q;
      }
  } else if (q == 4) {
    // GF(4) as {0, 1, t, t+1} with t^2 = t + 1; addition is xor
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) f.add[a][b] = a ^ b;
    const int m[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) f.mul[a][b] = m[a][b];
  } else {
    throw Error(ErrorCode::UnsupportedField, "finite_field supports q in {2,3,4,5}");
  }
  return f;
}

}  // namespace

LineCombinatorics finite_field(int q, const std::vector<DirectionChoice>& choices) {
  FieldTable f = field_table(q);
  const int dirs = q + 1;
  if (static_cast<int>(choices.size()) != dirs)
    throw Error(ErrorCode::ValidationError, "need one direction choice per direction (q+1)");
  const int n = dirs * q;
  // direction d in 0..q-1: slope d lines y = d*x + b; direction q: vertical x = b
  auto line_id = [&](int d, int b) { return d * q + b + 1; };
  std::vector<LineSet> pts;
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) {
      LineSet p;
      for (int s = 0; s < q; ++s) {
        // b = y - s*x; subtraction: y + (-s*x); char 2 fields: minus == plus
        int sx = f.mul[s][x];
        int neg = 0;
        for (int z = 0; z < q; ++z)
          if (f.add[sx][z] == 0) neg = z;
        p.push_back(line_id(s, f.add[y][neg]));
      }
      p.push_back(line_id(q, x));
      pts.push_back(p);
    }
  for (int d = 0; d < dirs; ++d) {
    if (choices[d] != DirectionChoice::Concurrent) continue;
    if (q < 3) continue;  // two parallel lines meet at an implicit double
    LineSet p;
    for (int b = 0; b < q; ++b) p.push_back(line_id(d, b));
    pts.push_back(p);
  }
  return validate(n, pts);
}

LineCombinatorics finite_field(int q, DirectionChoice choice) {
  return finite_field(q, std::vector<DirectionChoice>(q + 1, choice));
}

LineCombinatorics hesse() { return finite_field(3, DirectionChoice::GeneralPosition); }

LineCombinatorics degenerate_hesse() { return finite_field(3, DirectionChoice::Concurrent); }

}  // namespace fixtures
}  // namespace linepencils
