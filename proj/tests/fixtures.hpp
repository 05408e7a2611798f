#pragma once

// Paths and words used as worked samples, in canonical text form.

namespace fixtures {

// Sample 1: labeled decorated square path of size 7 with shift 2.
inline constexpr const char* kSample1 = "ENEENNNENENENE:2,1,2,3,1,2,3:2,6,7";
// Sample 2: standard version, diagonal word 4 1* 6 5 3* 2* 7 at shift 1.
inline constexpr const char* kSample2 = "ENENNENNEENENE:1,4,5,6,7,2,3:1,6,7";
inline constexpr const char* kSample2Word = "4 1* 6 5 3* 2* 7";

// Sample 3: a path of size 3 and its two cuts.
inline constexpr const char* kSample3 = "NNEENE:1,2,3:3";
inline constexpr const char* kSample3Psi1 = "ENENNE:3,1,2:1";
inline constexpr const char* kSample3Psi2 = "NENNEE:3,1,2:1";

// Sample 4: a cutting cycle of size 6 (n = 8, k = 2); (b) is canonical.
inline constexpr const char* kSample4a = "ENEENNENNNNENEEE:4,7,8,2,3,5,6,1:1,2";
inline constexpr const char* kSample4b = "ENNENNNNENEEEENE:7,8,2,3,5,6,1,4:1,8";
inline constexpr const char* kSample4c = "NNNNENEEEENEENNE:2,3,5,6,1,4,7,8:6,7";
inline constexpr const char* kSample4d = "NEEEENEENNENNNNE:1,4,7,8,2,3,5,6:2,3";
inline constexpr const char* kSample4e = "EEENEENNENNNNENE:4,7,8,2,3,5,6,1:1,2";
inline constexpr const char* kSample4f = "EENEENNENNNNENEE:4,7,8,2,3,5,6,1:1,2";
inline constexpr const char* kSample4Word = "7* 8 4* 2 3 5 6 1";

// Sample 6: schedule-one path of size 24 with its three stretches.
inline constexpr const char* kSample6 =
    "ENEENENEENENNNENNNNNNNENNENNNNEEEENEEEEENENEEENE:"
    "9,12,14,2,3,7,10,4,6,8,11,13,19,22,17,21,16,18,23,24,1,15,20,5:1,2,3,4,21,22,23,24";

// Sample 7: canonical representative of size 21 with 8 decorated
// valleys; labels 1..21 bottom to top keep every valley contractible.
inline constexpr const char* kSample7 =
    "ENENENNNENNNNENNENNNNENENEENEENEEEENEEEENE:"
    "1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21:1,2,16,17,18,19,20,21";

// Decorating-algorithm example.
inline constexpr const char* kPerm9 = "8 5 2 9 6 1 7 4 3";
inline constexpr const char* kPerm9Dyck = "8 5* 2* 9 6* 1 7* 4* 3";
inline constexpr const char* kPerm9Parity = "8* 5* 2* 9 6* 1 7* 4* 3";
inline constexpr const char* kPerm9Delta4 = "4 2 9* 6* 3 10* 5 1* 8* 7";

}  // namespace fixtures
