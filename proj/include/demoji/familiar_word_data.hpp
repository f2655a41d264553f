#pragma once

namespace demoji::readability {

// newline separated lowercase word list bundled into the binary
extern const char* k_familiar_words_raw;

}  // namespace demoji::readability
