#include "sdw/fixtures.hpp"

namespace sdw::fixtures {

namespace {

struct Row {
    const char* label;
    double grp;
    double urb;
    double resid;
};

constexpr Row kTable2[] = {
    {"Beijing", 87475, 86.20, 0.9550},
    {"Tianjin", 93173, 81.55, -0.9400},
    {"Hebei", 36584, 46.80, -0.6196},
    {"Shanxi", 33628, 51.26, 0.8315},
    {"Inner Mongolia", 63886, 57.74, -2.1058},
    {"Liaoning", 56649, 65.65, 0.7591},
    {"Jilin", 43415, 53.70, -0.0399},
    {"Heilongjiang", 35711, 56.90, 1.8165},
    {"Shanghai", 85373, 89.30, 1.9705},
    {"Jiangsu", 68347, 63.00, -1.5549},
    {"Zhejiang", 63374, 63.20, -0.7830},
    {"Anhui", 28792, 46.50, 0.4496},
    {"Fujian", 52763, 59.60, -0.0564},
    {"Jiangxi", 28800, 47.51, 0.6793},
    {"Shandong", 51768, 52.43, -1.5500},
    {"Henan", 31499, 42.43, -0.8760},
    {"Hubei", 38572, 53.50, 0.6216},
    {"Hunan", 33480, 46.65, -0.2006},
    {"Guangdong", 54095, 67.40, 1.5320},
    {"Guangxi", 27952, 43.53, -0.1066},
    {"Chongqing", 38914, 56.98, 1.3671},
    {"Sichuan", 29608, 43.53, -0.3484},
    {"Guizhou", 19710, 36.41, -0.5305},
    {"Yunnan", 22195, 39.31, -0.2305},
    {"Shaanxi", 38564, 50.02, -0.1726},
    {"Gansu", 21978, 38.75, -0.3268},
    {"Qinghai", 33181, 47.44, 0.0236},
    {"Ningxia", 36394, 50.67, 0.2927},
    {"Xinjiang", 33796, 43.98, -0.8571},
};

Dataset build_conventional() {
    std::vector<std::string> labels;
    std::vector<double> grp, urb, resid;
    for (const Row& r : kTable2) {
        labels.emplace_back(r.label);
        grp.push_back(r.grp);
        urb.push_back(r.urb);
        resid.push_back(r.resid);
    }
    return Dataset(std::move(labels),
                   {{"grp", std::move(grp)}, {"urb", std::move(urb)}, {"resid", std::move(resid)}});
}

}  // namespace

const Dataset& table2_conventional() {
    static const Dataset ds = build_conventional();
    return ds;
}

const Dataset& table2_alphabetical() {
    static const Dataset ds =
        apply_permutation(table2_conventional(), Permutation::sorting(table2_conventional().labels()));
    return ds;
}

}  // namespace sdw::fixtures
