#pragma once

#include <string>

namespace demoji {

// one corpus entry as it moves through the pipeline
struct Record {
    std::string id;
    std::u32string text;
};

}  // namespace demoji
