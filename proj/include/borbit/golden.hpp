#pragma once

// Checked-in fixtures: the C2 node-2 orbit posets (nilradical and full
// Hermitian variety) in PosetDocument JSON form, frozen from the worked
// Sp4 example. The hermitian fixture has 11 nodes, 16 covering edges and
// 12 decorations; among the coverings out of (s2s1s2, {eta}) exactly two
// are undecorated.

namespace borbit::golden {

extern const char* const sp4_pu_json;
extern const char* const sp4_gl_json;

}  // namespace borbit::golden
