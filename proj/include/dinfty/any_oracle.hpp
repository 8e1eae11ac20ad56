#pragma once

// Runtime-polymorphic wrapper over the exact-arithmetic oracle, so that the
// engine, suites, and CLI can select the coefficient field at run time.

#include <memory>
#include <string>
#include <vector>

#include "dinfty/field.hpp"
#include "dinfty/labels.hpp"
#include "dinfty/oracle.hpp"

namespace dinfty {

class AnyOracle {
   public:
    template <class Field>
    AnyOracle(const Field& field, int n_max)
        : impl_(std::make_shared<Model<Field>>(field, n_max)) {}

    int hom(const Label& x, const Label& y) { return impl_->hom(x, y); }
    int ext1(const Label& x, const Label& y) { return impl_->ext1(x, y); }
    bool compose_nonzero(const Label& x, const Label& z, const Label& y) {
        return impl_->compose_nonzero(x, z, y);
    }
    CheckReport validate_sequence(const Label& left, const std::vector<Label>& mids,
                                  const Label& right) {
        return impl_->validate_sequence(left, mids, right);
    }
    int truncation() const { return impl_->truncation(); }
    std::string field_name() const { return impl_->field_name(); }

   private:
    struct Concept {
        virtual ~Concept() = default;
        virtual int hom(const Label&, const Label&) = 0;
        virtual int ext1(const Label&, const Label&) = 0;
        virtual bool compose_nonzero(const Label&, const Label&, const Label&) = 0;
        virtual CheckReport validate_sequence(const Label&, const std::vector<Label>&,
                                              const Label&) = 0;
        virtual int truncation() const = 0;
        virtual std::string field_name() const = 0;
    };

    template <class Field>
    struct Model final : Concept {
        Model(const Field& field, int n_max) : oracle(field, n_max) {}
        int hom(const Label& x, const Label& y) override { return oracle.hom(x, y); }
        int ext1(const Label& x, const Label& y) override { return oracle.ext1(x, y); }
        bool compose_nonzero(const Label& x, const Label& z, const Label& y) override {
            return oracle.compose_nonzero(x, z, y);
        }
        CheckReport validate_sequence(const Label& left, const std::vector<Label>& mids,
                                      const Label& right) override {
            return oracle.validate_sequence(left, mids, right);
        }
        int truncation() const override { return oracle.truncation(); }
        std::string field_name() const override { return oracle.field().name(); }

        Oracle<Field> oracle;
    };

    std::shared_ptr<Concept> impl_;
};

// The standard oracle for a CLI invocation: big enough for the requested
// window plus the slack the engine needs for translated arguments.
inline AnyOracle make_oracle(const std::string& field, long long prime, int window) {
    const int n_max = window + 10;
    if (field == "rational") return AnyOracle(RationalField{}, n_max);
    if (field == "gfp") return AnyOracle(GfpField{prime}, n_max);
    throw std::invalid_argument("unknown field '" + field + "' (use gfp or rational)");
}

}  // namespace dinfty
