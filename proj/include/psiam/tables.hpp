#pragma once

/** The published tuple tables, stored as sets (duplicate rows dropped). */

#include <algorithm>
#include <string>
#include <vector>

#include "search.hpp"

namespace psiam {

struct EmbeddedTable {
    std::string name;
    TupleKind kind;
    unsigned k;
    std::vector<std::vector<u64>> entries; ///< each sorted non-decreasing

    /// Largest member across all entries: the search bound that reproduces the table.
    u64 bound() const {
        u64 b = 1;
        for (const auto &e : entries)
            b = std::max(b, e.back());
        return b;
    }
};

inline const std::vector<EmbeddedTable> &embedded_tables() {
    static const std::vector<EmbeddedTable> tables = {
        // psi-amicable triples, sum-equal definition
        {"Table 1", TupleKind::SumEqual, 3,
         {
            {79170, 80850, 81900}, {150150, 158340, 175350}, {158340, 161700, 163800}, {237510, 242550, 245700},
            {300300, 316680, 350700}, {316680, 323400, 327600}, {395850, 404250, 409500}, {450450, 474810, 526260},
            {450450, 475020, 526050}, {468930, 483210, 499380}, {474810, 485940, 490770}, {475020, 485100, 491400},
            {554190, 565950, 573300}, {570570, 662340, 702450}, {600600, 633360, 701400}, {622440, 641550, 671370},
            {633360, 646800, 655200}, {641550, 646800, 647010}, {644280, 644280, 646800}, {696150, 696150, 784980},
            {712530, 727650, 737100}
         }},
        // triples, Yanney definition; the source lists (315, 320, 517) and (512, 512, 512) twice each
        {"Table 2", TupleKind::Yanney, 3,
         {
            {6, 9, 9}, {8, 8, 8}, {16, 16, 16}, {18, 27, 27}, {28, 33, 35}, {32, 32, 32}, {44, 45, 55},
            {64, 64, 64}, {54, 81, 81}, {70, 99, 119}, {105, 124, 155}, {128, 128, 128}, {110, 135, 187},
            {165, 176, 235}, {150, 275, 295}, {200, 225, 295}, {182, 245, 245}, {162, 243, 243}, {256, 256, 256},
            {238, 255, 371}, {240, 385, 527}, {280, 345, 527}, {310, 315, 527}, {310, 345, 497}, {315, 320, 517},
            {382, 385, 385}, {364, 441, 539}, {512, 512, 512}, {468, 715, 833}, {520, 663, 833}, {585, 598, 833},
            {644, 705, 955}, {590, 675, 895}, {486, 729, 729}, {795, 862, 935}, {800, 885, 1195}
         }},
        // quadruples, Yanney definition
        {"Table 3", TupleKind::Yanney, 4,
         {
            {6, 8, 11, 11}, {8, 8, 9, 11}, {9, 9, 9, 9}, {12, 14, 23, 23}, {27, 27, 27, 27}, {32, 32, 33, 47},
            {30, 44, 71, 71}, {44, 46, 55, 71}, {45, 45, 55, 71}, {51, 55, 55, 55}, {68, 68, 81, 107},
            {81, 81, 81, 81}, {99, 99, 115, 119}, {75, 95, 95, 95}, {96, 128, 161, 191}, {105, 155, 155, 161},
            {112, 112, 161, 191}, {100, 116, 145, 179}, {114, 158, 209, 239}, {152, 152, 177, 239},
            {152, 158, 171, 239}, {171, 171, 175, 203}, {188, 188, 235, 253}, {164, 166, 205, 221},
            {190, 236, 295, 359}, {225, 261, 275, 319}, {243, 243, 243, 243}, {186, 254, 329, 383},
            {204, 230, 431, 431}, {230, 284, 391, 391}, {238, 272, 355, 431}, {255, 255, 355, 431}
         }},
        // quintuples, Yanney definition
        {"Table 4", TupleKind::Yanney, 5,
         {
            {12, 15, 23, 23, 23}, {28, 35, 35, 47, 47}, {32, 33, 33, 47, 47}, {30, 45, 71, 71, 71},
            {36, 55, 55, 71, 71}, {40, 51, 55, 71, 71}, {44, 51, 51, 71, 71}, {45, 46, 55, 71, 71},
            {78, 117, 143, 167, 167}, {98, 117, 123, 167, 167}, {104, 117, 117, 167, 167},
            {84, 141, 161, 191, 191}, {112, 155, 155, 155, 191}, {124, 161, 161, 161, 161},
            {158, 175, 209, 209, 209}, {158, 177, 177, 209, 239}, {140, 253, 253, 253, 253},
            {176, 235, 235, 253, 253}, {174, 225, 323, 359, 359}, {174, 261, 323, 323, 359},
            {200, 261, 261, 359, 359}, {200, 267, 295, 319, 359}, {200, 275, 319, 323, 323}
         }},
        // sextuples, Yanney definition
        {"Table 5", TupleKind::Yanney, 6,
         {
            {24, 28, 47, 47, 47, 47}, {32, 32, 35, 47, 47, 47}, {33, 33, 33, 47, 47, 47}, {30, 46, 71, 71, 71, 71},
            {36, 40, 71, 71, 71, 71}, {45, 51, 51, 71, 71, 71}, {46, 46, 55, 71, 71, 71},
            {98, 98, 143, 167, 167, 167}, {117, 123, 123, 143, 167, 167}, {84, 112, 191, 191, 191, 191},
            {105, 141, 141, 191, 191, 191}, {128, 128, 161, 161, 191, 191}, {141, 141, 141, 155, 191, 191},
            {155, 161, 161, 161, 161, 161}, {152, 152, 209, 209, 239, 239}, {152, 158, 203, 209, 239, 239},
            {158, 158, 203, 203, 239, 239}, {171, 171, 171, 209, 239, 239}, {171, 171, 177, 203, 239, 239},
            {171, 175, 203, 203, 209, 239}, {175, 177, 203, 203, 203, 239}
         }},
    };
    return tables;
}

/** Table entries checked against an exhaustive search. `missing` entries
 *  (not found by search) and `invalid` entries (fail re-verification) are
 *  failures; `extra` solutions absent from the table are discrepancies only. */
struct TableVerification {
    std::string name;
    u64 bound;
    std::size_t entries;
    std::size_t found;
    std::vector<std::vector<u64>> missing;
    std::vector<std::vector<u64>> invalid;
    std::vector<std::vector<u64>> extra;

    bool ok() const { return missing.empty() && invalid.empty(); }
};

inline TableVerification verify_table(const EmbeddedTable &table, u64 bound) {
    TableVerification r{table.name, bound, table.entries.size(), 0, {}, {}, {}};
    std::vector<std::vector<u64>> found;
    for (const auto &t : find_ktuples(table.kind, table.k, bound))
        found.push_back(t.members); // already lexicographic
    std::vector<std::vector<u64>> wanted = table.entries;
    std::sort(wanted.begin(), wanted.end());

    for (const auto &e : wanted) {
        const AmicableTuple t{table.kind, table.k, e, psi(e.front()).psi};
        if (!reverify(t))
            r.invalid.push_back(e);
        if (std::binary_search(found.begin(), found.end(), e))
            ++r.found;
        else
            r.missing.push_back(e);
    }
    for (const auto &f : found)
        if (!std::binary_search(wanted.begin(), wanted.end(), f))
            r.extra.push_back(f);
    return r;
}

inline TableVerification verify_table(const EmbeddedTable &table) { return verify_table(table, table.bound()); }

} // namespace psiam
