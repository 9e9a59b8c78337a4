#include "gkz/reference_tables.hpp"

#include <stdexcept>
#include <string>

namespace gkz {

namespace {

constexpr ReferenceRow kTable1[] = {
    {"43A", -2, 2}, {"131A", 0, 0}, {"163A", 0, -2}, {"347A", -2, -2}, {"443A", 0, -2},
    {"467A", 0, 0}, {"811A", 0, 2}, {"827A", 0, 2}, {"1019A", 0, 0}, {"1019B", -2, -4},
    {"1051A", 0, 0}, {"1259A", 0, -2}, {"1747A", 2, 2}, {"1811A", 0, -2}, {"1987A", 0, -2},
    {"2539A", -2, 4}, {"2699A", 0, 0}, {"3251A", 0, 2}, {"3259A", -2, -4}, {"3259B", -2, -10},
    {"3347A", 2, 0}, {"3547A", 0, -2}, {"3851A", -2, 0}, {"3931A", 0, -2}, {"3947A", 0, 0},
    {"4051A", 0, 4}, {"4507A", -2, -6}, {"4603A", -2, -2}, {"5443A", 2, 0}, {"5563A", 0, 4},
    {"6131A", 2, 0}, {"6691A", 0, -8}, {"7019A", -2, -2}, {"7187A", 2, 2}, {"7283A", 0, 0},
    {"8419A", 2, 0}, {"8747A", 0, -4}, {"8803A", 0, -2}, {"9539A", 2, 0}, {"9587A", 2, -2},
    {"9811A", 0, -4}, {"10859A", 0, 4}, {"10859B", -2, 4}, {"10987A", 0, 0}, {"11867A", -2, 6},
    {"11923A", 0, -4}, {"11939A", 0, -2}, {"11939B", 2, 0}, {"12163A", 2, 4}, {"12619A", -2, -6},
    {"13043A", 0, 0}, {"13523A", 2, 0}, {"15083A", -2, 6}, {"15091A", 2, 2}, {"15131A", 0, 4},
    {"15227A", 0, -2}, {"15971A", 2, 2}, {"16883A", 0, 2}, {"16963A", 2, 10}, {"17387A", 0, 0},
    {"17387B", -2, -8}, {"17483A", -2, 6}, {"17747A", 2, 2}, {"17827A", 0, 4}, {"18059A", 0, 0},
    {"18251A", -2, 8}, {"18859A", -2, -2}, {"19387A", 0, -4}, {"19387B", 0, -6},
};

constexpr ReferenceRow kTable2[] = {
    {"79A", -1, 1}, {"83A", -1, 1}, {"331A", -1, 4}, {"359A", 1, 2}, {"359B", -1, 0},
    {"431A", -1, 1}, {"443B", -1, 1}, {"503A", 1, 1}, {"659A", 1, 1}, {"1091A", -1, -3},
    {"1439A", 1, 1}, {"1607A", -1, -1}, {"3023A", -1, 1}, {"3163A", 1, -4}, {"3391A", -1, 1},
    {"3803A", 1, 3}, {"4159A", 1, 0}, {"4159B", 1, -6}, {"4799A", -1, 2}, {"4799B", -1, 6},
    {"5503A", -1, -3}, {"5867A", 1, 0}, {"5987A", 1, 2}, {"6011A", 1, 1}, {"6199A", -1, -4},
    {"6427A", 1, 1}, {"6823A", -1, -1}, {"6967A", 1, 0}, {"7219A", -1, -1}, {"7699A", 1, 2},
    {"7723A", 1, 5}, {"8167A", 1, -1}, {"8623A", 1, 3}, {"9127A", -1, -4}, {"9491A", -1, 4},
    {"9811B", -1, -1}, {"10163A", 1, 0}, {"10567A", 1, -3}, {"10799A", 1, 5}, {"11119A", 1, -1},
    {"12007A", 1, 13}, {"12227A", 1, -5}, {"12547A", 1, -2}, {"13451A", -1, -7}, {"13619A", -1, -2},
    {"13723A", -1, 10}, {"13723B", -1, 4}, {"15551A", 1, 1}, {"15859A", -1, 1}, {"16411A", 1, 4},
    {"17299A", -1, -6}, {"18059B", 1, 2}, {"18127A", 1, -8}, {"18523A", -1, -7}, {"18899A", 1, -5},
    {"19211A", 1, -6}, {"19583A", -1, -1}, {"19927A", 1, -3},
};

constexpr ReferenceRow kTable3[] = {
    {"37A", -1, 3}, {"53A", -1, 1}, {"61A", 1, 1}, {"89A", 1, -1}, {"101A", -1, 1},
    {"197A", -1, -5}, {"229A", 0, -2}, {"269A", -1, 3}, {"277A", -1, 3}, {"373A", 1, 1},
    {"557A", 1, 1}, {"593A", 1, -5}, {"677A", -1, -1}, {"797A", 0, 0}, {"829A", -1, -9},
    {"997A", 0, 8}, {"1549A", 1, 5}, {"1949A", 1, 3}, {"1973A", 1, 1}, {"2017A", 1, 5},
    {"2089A", 0, 8}, {"2141A", -1, -3}, {"2161A", 1, 1}, {"2221A", 1, 1}, {"2269A", 1, -3},
    {"2341A", -1, 1}, {"2357A", 1, -1}, {"2557A", 0, 2}, {"2609A", 1, 1}, {"2749A", 1, -5},
    {"3109A", 1, 7}, {"3229A", 0, 6}, {"3313A", -1, 3}, {"3469A", -1, -7}, {"3797A", -2, -10},
    {"3853A", 1, 3}, {"3877A", 1, 5}, {"4021A", 1, -1}, {"4481A", -2, -10}, {"4481B", 0, 4},
    {"4493A", -2, 4}, {"5237A", -1, 5}, {"5309A", -1, 7}, {"5417A", 1, 3}, {"5417B", 4, -8},
    {"5417C", 0, -4}, {"5653A", 0, 2}, {"5717A", 0, -2}, {"6373A", -2, 10}, {"6689A", 1, -5},
    {"7109A", 1, -1}, {"7109B", 1, 3}, {"7213A", 1, 15}, {"7757A", 1, 3}, {"8069A", 0, -4},
    {"8101A", -3, -19}, {"8597A", 0, -4}, {"8929A", 1, 7}, {"9109A", 1, 3}, {"9413A", 0, -10},
    {"9829A", -4, -4}, {"9941A", -1, -1}, {"10061A", -1, -3}, {"10333A", 1, -5}, {"10333B", 1, 7},
    {"10733A", 0, -2}, {"10789A", -1, -1}, {"10949A", 2, -4}, {"11321A", 1, -1}, {"11321B", 0, -4},
    {"11353A", 1, -5}, {"11789A", 0, 10}, {"12097A", -1, 1}, {"12277A", -1, -1}, {"12289A", -1, -7},
    {"12413A", 1, 3}, {"13093A", 0, -6}, {"13537A", 2, 14}, {"13789A", 2, 14}, {"14173A", -1, 1},
    {"14461A", 0, -8}, {"15013A", -1, 9}, {"15101A", -1, 15}, {"15349A", 0, -2}, {"15641A", 1, -5},
    {"15661A", 1, -31}, {"15661B", 1, -5}, {"15773A", 0, -6}, {"15889A", -1, 5}, {"16061A", -1, 1},
    {"16189A", -1, -11}, {"16369A", 0, -8}, {"16649A", 0, 4}, {"16649B", 0, -4}, {"16889A", -1, 5},
    {"16937A", 1, 3}, {"17093A", 1, -5}, {"17573A", 0, 12}, {"17837A", -1, 9}, {"18097A", 0, 12},
    {"18269A", 0, -2}, {"18397A", 0, 12}, {"19469A", 2, -4},
};

}  // namespace

std::span<const ReferenceRow> reference_table(int which) {
    switch (which) {
        case 1: return kTable1;
        case 2: return kTable2;
        case 3: return kTable3;
        default: throw std::invalid_argument("reference_table: no table " + std::to_string(which));
    }
}

std::optional<ReferenceRow> find_reference(int which, std::string_view label) {
    for (const auto& row : reference_table(which))
        if (row.label == label) return row;
    return std::nullopt;
}

}  // namespace gkz
