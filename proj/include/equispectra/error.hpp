#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace equispectra {

/// Structured failure: {code, module, message, context}. The CLI serializes
/// these verbatim. code "oracle" marks disagreement between independent routes.
class Error : public std::runtime_error {
public:
    using Context = std::map<std::string, std::string>;

    Error(std::string code, std::string module, const std::string& message, Context context = {})
        : std::runtime_error(message), code_(std::move(code)), module_(std::move(module)),
          context_(std::move(context)) {}

    const std::string& code() const { return code_; }
    const std::string& module() const { return module_; }
    const Context& context() const { return context_; }

private:
    std::string code_;
    std::string module_;
    Context context_;
};

}  // namespace equispectra
