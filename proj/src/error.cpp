#include "river/error.hpp"

namespace river {

WindowExceeded::WindowExceeded(int row, long twist, long column)
    : Error("literal table queried outside its window: h^" + std::to_string(row) + "(F(" +
            std::to_string(twist) + ")) at display column " + std::to_string(column)),
      row_(row),
      twist_(twist),
      column_(column) {}

ParseError::ParseError(const std::string& what, int line, int column)
    : Error(line > 0 ? what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"
                     : what),
      line_(line),
      column_(column) {}

}  // namespace river
