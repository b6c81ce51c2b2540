#include <sstream>

#include "perckit/families.hpp"

namespace perckit {

namespace {

// Keep in sync with core/data/x_corpus.g6 (tests compare the two and also
// re-derive the corpus from scratch).
const char kXCorpusData[] =
    "# derived over built-in enumeration, orders <= 8\n"
    "# filter: sigma2 >= n-2, m(G,2) > 2, not G0-G3\n"
    "DqK\n"
    "EsWW\n"
    "EsXO\n"
    "E{OW\n"
    "GsXPGs\n"
    "GsXP_[\n"
    "G{O_ww\n"
    "G{S_g[\n";

}  // namespace

const XCorpus& builtin_x_corpus() {
    static const XCorpus corpus = [] {
        std::istringstream in(kXCorpusData);
        return XCorpus::parse(in);
    }();
    return corpus;
}

}  // namespace perckit
