#ifndef FXNET_DIGEST_HPP
#define FXNET_DIGEST_HPP

#include <string>
#include <string_view>

namespace fxnet {

/// SHA-256 of the given bytes, lowercase hex.
std::string sha256_hex(std::string_view bytes);

} // namespace fxnet

#endif
