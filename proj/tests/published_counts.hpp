#pragma once

// Reference values of |P_n(k)| for n = 2..14, one row per n, k = 0..n+offset.

#include <string_view>
#include <vector>

namespace padj::testdata {

using CountRows = std::vector<std::vector<std::string_view>>;

inline const CountRows kType1Counts = {
    {"1", "1"},
    {"3", "2", "1"},
    {"11", "9", "3", "1"},
    {"53", "44", "18", "4", "1"},
    {"309", "265", "110", "30", "5", "1"},
    {"2119", "1854", "795", "220", "45", "6", "1"},
    {"16687", "14833", "6489", "1855", "385", "63", "7", "1"},
    {"148329", "133496", "59332", "17304", "3710", "616", "84", "8", "1"},
    {"1468457", "1334961", "600732", "177996", "38934", "6678", "924", "108", "9", "1"},
    {"16019531", "14684570", "6674805", "2002440", "444990", "77868", "11130", "1320", "135", "10", "1"},
    {"190899411", "176214841", "80765135", "24474285", "5506710", "978978", "142758", "17490", "1815", "165", "11", "1"},
    {"2467007773", "2290792932", "1057289046", "323060540", "73422855", "13216104", "1957956", "244728", "26235", "2420", "198", "12", "1"},
    {"34361893981", "32071101049", "14890154058", "4581585866", "1049946755", "190899423", "28634892", "3636204", "397683", "37895", "3146", "234", "13", "1"},
};

inline const CountRows kType2Counts = {
    {"1", "0", "1"},
    {"2", "3", "0", "1"},
    {"9", "8", "6", "0", "1"},
    {"44", "45", "20", "10", "0", "1"},
    {"265", "264", "135", "40", "15", "0", "1"},
    {"1854", "1855", "924", "315", "70", "21", "0", "1"},
    {"14833", "14832", "7420", "2464", "630", "112", "28", "0", "1"},
    {"133496", "133497", "66744", "22260", "5544", "1134", "168", "36", "0", "1"},
    {"1334961", "1334960", "667485", "222480", "55650", "11088", "1890", "240", "45", "0", "1"},
    {"14684570", "14684571", "7342280", "2447445", "611820", "122430", "20328", "2970", "330", "55", "0", "1"},
    {"176214841", "176214840", "88107426", "29369120", "7342335", "1468368", "244860", "34848", "4455", "440", "66", "0", "1"},
    {"2290792932", "2290792933", "1145396460", "381798846", "95449640", "19090071", "3181464", "454740", "56628", "6435", "572", "78", "0", "1"},
    {"32071101049", "32071101048", "16035550531", "5345183480", "1336295961", "267258992", "44543499", "6362928", "795795", "88088", "9009", "728", "91", "0", "1"},
};

inline const CountRows kType4Counts = {
    {"1", "0", "0", "1"},
    {"1", "4", "0", "0", "1"},
    {"8", "5", "10", "0", "0", "1"},
    {"36", "48", "15", "20", "0", "0", "1"},
    {"229", "252", "168", "35", "35", "0", "0", "1"},
    {"1625", "1832", "1008", "448", "70", "56", "0", "0", "1"},
    {"13208", "14625", "8244", "3024", "1008", "126", "84", "0", "0", "1"},
    {"120288", "132080", "73125", "27480", "7560", "2016", "210", "120", "0", "0", "1"},
    {"1214673", "1323168", "726440", "268125", "75570", "16632", "3696", "330", "165", "0", "0", "1"},
    {"13469897", "14576076", "7939008", "2905760", "804375", "181368", "33264", "6336", "495", "220", "0", "0", "1"},
    {"162744944", "175108661", "94744494", "34402368", "9443720", "2091375", "392964", "61776", "10296", "715", "286", "0", "0", "1"},
    {"2128047988", "2278429216", "1225760627", "442140972", "120408288", "26442416", "4879875", "785928", "108108", "16016", "1001", "364", "0", "0", "1"},
    {"29943053061", "31920719820", "17088219120", "6128803135", "1658028645", "361224864", "66106040", "10456875", "1473615", "180180", "24024", "1365", "455", "0", "0", "1"},
};

}  // namespace padj::testdata
