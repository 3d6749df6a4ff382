#pragma once

#include <string>
#include <string_view>

namespace simrouge {

// Porter (1980) suffix stripping, following the reference C release: words of
// one or two letters are returned unchanged, and step 2 uses the BLI->BLE and
// LOGI->LOG rules. Input must be lowercase; words containing anything other
// than ASCII letters are returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace simrouge
