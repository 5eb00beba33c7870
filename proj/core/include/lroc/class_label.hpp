#pragma once

namespace lroc {

enum class ClassLabel { negative, positive };

}  // namespace lroc
