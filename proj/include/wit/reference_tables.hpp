#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace wit {

/// Published per-subband information amounts, kept verbatim as printed
/// ("bits (percent)"). Cells run Approx, Detail J..1; an empty cell was not printed.
struct ReferenceRow {
    std::string wavelet;
    std::vector<std::string> cells;
    std::string total;  ///< empty on the unlabelled second row of a wavelet
};

struct ReferenceTable {
    std::string signal;
    int levels = 0;
    std::vector<ReferenceRow> rows;
};

inline const std::vector<double>& reference_x1() {
    static const std::vector<double> v{9, 11, 9, 11, 9, 11, 9, 11, 9, 11, 9, 11, 9, 11, 9, 11};
    return v;
}

inline const std::vector<double>& reference_dc16() {
    static const std::vector<double> v(16, 1.0);
    return v;
}

inline const std::vector<double>& reference_x3() {
    static const std::vector<double> v{0.9501, 0.2311, 0.6068, 0.4860, 0.8913, 0.7621, 0.4565, 0.0185,
                                       0.8214, 0.4447, 0.6154, 0.7919, 0.9218, 0.7382, 0.1763, 0.4057};
    return v;
}

inline const std::vector<ReferenceTable>& reference_tables() {
    static const std::vector<ReferenceTable> tables{
        {"x1", 1,
         {{"db1", {"0.0000 (0.0)", "<0.0001 (100)"}, "<0.0001"},
          {"db2", {"<0.0001 (0.9)", "0.0001 (99.1)"}, "0.0001"},
          {"db4", {"<0.0001 (0.7)", "0.0018 (99.3)"}, "0.0018"},
          {"db5", {"<0.0001 (0.6)", "0.0027 (99.4)"}, "0.0028"},
          {"coif2", {"<0.0001 (0.8)", "0.0007 (99.2)"}, "0.0008"},
          {"coif3", {"<0.0001 (0.8)", "0.0007 (99.2)"}, "0.0007"},
          {"sym1", {"0.0001 (26.6)", "0.0002 (73.4)"}, "0.0003"},
          {"sym2", {"0.0001 (26.6)", "0.0003 (73.4)"}, "0.0004"}}},
        {"x1", 2,
         {{"db1", {"0.0071 (20.2)", "0.0000 (0.0)", "0.0280 (79.8)"}, "0.0351"},
          {"db1", {"0.0043 (20.3)", "0.0001 (0.7)", "0.0169 (79.0)"}, ""},
          {"db2", {"0.0030 (17.5)", "0.0008 (4.9)", "0.0135 (77.6)"}, "0.0174"},
          {"db2", {"0.0022 (16.2)", "0.0004 (2.6)", "0.0111 (81.2)"}, ""},
          {"db5", {"0.0011 (17.4)", "0.0004 (6.9)", "0.0048 (75.7)"}, "0.0063"},
          {"db5", {"0.0000 (0.6)", "0.0003 (35.7)", "0.0006 (63.7)"}, ""},
          {"coif2", {"0.0071 (20.0)", "0.0002 (0.6)", "0.0283 (79.4)"}, "0.0356"},
          {"coif2", {"0.0044 (20.1)", "0.0003 (1.6)", "0.0171 (78.3)"}, ""},
          {"coif3", {"0.0071 (20.0)", "0.0002 (0.6)", "0.0283 (79.4)"}, "0.0356"},
          {"coif3", {"0.0044 (20.1)", "0.0003 (1.6)", "0.0171 (78.3)"}, ""},
          {"sym1", {"0.0071 (20.0)", "0.0002 (0.6)", "0.0283 (79.4)"}, "0.0356"},
          {"sym1", {"0.0044 (20.1)", "0.0003 (1.6)", "0.0171 (78.3)"}, ""},
          {"sym2", {"0.0071 (20.0)", "0.0002 (0.6)", "0.0283 (79.4)"}, "0.0356"},
          {"sym2", {"0.0044 (20.1)", "0.0003 (1.6)", "0.0171 (78.3)"}, ""}}},
        {"x1", 3,
         {{"db1", {"0.0106 (19.3)", "0.0000 (0.0)", "0.0000 (0.0)", "0.0445 (80.7)"}, "0.0552"},
          {"db1", {"0.0076 (19.7)", "0.0001 (0.2)", "0.0005 (1.2)", "0.0306 (78.9)"}, ""},
          {"db2", {"0.0032 (18.4)", "0.0001 (0.4)", "0.0007 (4.2)", "0.0133 (77.0)"}, "0.0388"},
          {"db2", {"0.0042 (17.9)", "0.0001 (0.6)", "0.0003 (1.3)", "0.0189 (80.2)"}, ""},
          {"db4", {"0.0021 (18.7)", "0.0001 (0.7)", "0.0004 (3.5)", "0.0087 (77.1)"}, "0.0113"},
          {"db4", {"0.0000 (0.5)", "0.0001 (7.5)", "0.0003 (31.1)", "0.0007 (60.9)"}, ""},
          {"coif2", {"0.0107 (19.1)", "0.0001 (0.1)", "0.0002 (0.4)", "0.0448 (80.4)"}, "0.0557"},
          {"coif2", {"0.0077 (19.5)", "0.0001 (0.3)", "0.0007 (1.7)", "0.0308 (78.5)"}, ""},
          {"sym2", {"", "", "", ""}, "0.0393"}}},
        {"x3", 1,
         {{"db1", {"0.0111 (10.5)", "0.0944 (89.5)"}, "0.1055"},
          {"db2", {"0.0112 (13.3)", "0.0730 (86.7)"}, "0.0842"},
          {"db4", {"0.0088 (9.4)", "0.0846 (90.6)"}, "0.0934"},
          {"db5", {"0.0153 (12.4)", "0.1081 (87.6)"}, "0.1234"},
          {"coif2", {"0.0075 (9.6)", "0.0705 (90.4)"}, "0.0780"},
          {"coif3", {"0.0090 (10.7)", "0.0752 (89.3)"}, "0.0842"},
          {"sym1", {"0.0210 (15.1)", "0.1182 (84.9)"}, "0.1392"},
          {"sym2", {"0.0183 (15.9)", "0.0969 (84.1)"}, "0.1152"}}},
        {"x3", 2,
         {{"db1", {"0.0312 (13.4)", "0.0982 (42.3)", "0.1028 (44.3)"}, "0.2322"},
          {"db1", {"0.0282 (22.6)", "0.0161 (12.9)", "0.0806 (64.5)"}, ""},
          {"db2", {"0.0233 (15.9)", "0.0357 (24.3)", "0.0881 (59.8)"}, "0.1471"},
          {"db2", {"0.0144 (8.9)", "0.0378 (23.4)", "0.1093 (67.7)"}, ""},
          {"db4", {"0.0055 (5.0)", "0.0385 (35.3)", "0.0651 (59.7)"}, "0.1615"},
          {"db4", {"0.0168 (11.9)", "0.0342 (24.3)", "0.0897 (63.6)"}, ""},
          {"coif2", {"0.0625 (18.8)", "0.1109 (33.3)", "0.1594 (47.9)"}, "0.3328"},
          {"coif2", {"0.0582 (27.3)", "0.0175 (8.2)", "0.1373 (64.5)"}, ""},
          {"sym2", {"", "", ""}, "0.2131"}}},
        {"x3", 3,
         {{"db1", {"0.0991 (28.8)", "0.0020 (0.6)", "0.1324 (38.6)", "0.1098 (32.0)"}, "0.3433"},
          {"db1", {"0.0656 (25.2)", "0.0241 (9.3)", "0.03 (11.6)", "0.1401 (53.9)"}, ""},
          {"db2", {"0.0301 (17.6)", "0.0111 (6.5)", "0.0424 (24.9)", "0.087 (51.0)"}, "0.1706"},
          {"db2", {"0.0233 (12.0)", "0.0318 (16.2)", "0.0333 (17.1)", "0.1067 (54.7)"}, ""},
          {"db4", {"0.0107 (8.2)", "0.0202 (15.4)", "0.0454 (34.8)", "0.0544 (41.6)"}, "0.1307"},
          {"db4", {"0.0077 (5.3)", "0.039 (26.9)", "0.0368 (25.4)", "0.0613 (42.4)"}, ""},
          {"coif2", {"0.1051 (24.1)", "0.0439 (10.1)", "0.149 (34.2)", "0.1374 (31.6)"}, "0.4353"},
          {"coif2", {"0.073 (21.5)", "0.0656 (19.3)", "0.0329 (9.7)", "0.1678 (49.5)"}, ""},
          {"sym2", {"", "", "", ""}, "0.3394"}}},
    };
    return tables;
}

/// The published table for (signal, levels), or nullptr.
inline const ReferenceTable* find_reference_table(std::string_view signal, int levels) {
    for (const auto& t : reference_tables())
        if (t.signal == signal && t.levels == levels) return &t;
    return nullptr;
}

/// Published rows for one wavelet (one or two), in print order.
inline std::vector<ReferenceRow> reference_rows(const ReferenceTable& t, std::string_view wavelet) {
    std::vector<ReferenceRow> out;
    for (const auto& r : t.rows)
        if (r.wavelet == wavelet) out.push_back(r);
    return out;
}

}  // namespace wit
