#pragma once

#include <string>

namespace lgkkp {

/// A quoted value that disagrees with the value computed here. Both are kept;
/// the computed one drives anything downstream.
struct Discrepancy {
    std::string topic;
    std::string stated;
    std::string derived;
    std::string note;
};

}  // namespace lgkkp
