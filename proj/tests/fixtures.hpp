#ifndef CHAMBERS_TESTS_FIXTURES_HPP
#define CHAMBERS_TESTS_FIXTURES_HPP

// Hand transcriptions of the printed "Preface" material used across the
// test suites. The same texts ship under data/ for the command line tool.

namespace fixtures {

// Minerology entry, transcribed from the printed figure. Editorial choices:
// the broken word "Earth,quake" becomes one concept with a note, and the
// closing "and the like." is normalized to "&c." with a note.
inline const char* kMinerology = R"(@domain{MINEROLOGY} roman{, or the} italic{History of EARTH};
@ord{1} roman{, Its Parts, as} italic{Mountain}, italic{Mine}, italic{Moss}, italic{Bog}, italic{Grotto};
roman{and their Phænomena, as} italic{Earthquake} @note{printed "Earth,quake" across a line break}, italic{Volcano}, italic{Conflagration}, &c.
roman{Its Strata, as} italic{Clay}, italic{Bole}, italic{Sand}, &c.
@ord{2} roman{, Fossils or Minerals, as} italic{Metals}, italic{Gold}, italic{Silver}, italic{Mercury}, &c.
roman{with Operations relating to 'em, as} italic{Fusion}, italic{Refining}, italic{Purifying}, italic{Parting}, italic{Effaying}, &c.
italic{Litharge}, italic{Lavatory}, italic{Pinea}, &c.
roman{Salts, as} italic{Nitre}, italic{Natron}, italic{Gemma}, italic{Allum}, italic{Armoniac}, italic{Borax}, &c.
roman{Sulphurs, as} italic{Arsenic}, italic{Amber}, italic{Ambergrease}, italic{Coal}, italic{Bitumen}, italic{Naphtha}, italic{Petrol}, &c.
roman{Semi-metals, as} italic{Antimony}, italic{Cinnabar}, italic{Marcasite}, italic{Magnet}, italic{Bismuth}, italic{Calamine}, italic{Cobalt}, &c.
roman{Stones, as} italic{Marble}, italic{Porphyry}, italic{Slate}, italic{Asbestos}, &c.
roman{Gems, as} italic{Diamond}, italic{Ruby}, italic{Emerald}, italic{Opal}, italic{Turcoise}, &c.
italic{Emery}, italic{Lapis}, &c.
roman{whence} italic{Ultramarine}, italic{Azure}, &c.
roman{Petrifications, as} italic{Crystal}, italic{Spar}, italic{Stalactites}, italic{Trochites}, italic{Cornu Ammonis}, &c.
@note{the Petrifications list closes "and the like." in print; normalized to "&c."}
)";

// Independent hand tally of the concept terms in the Minerology figure:
//   1: Parts 5, Phaenomena 3, Strata 3           = 11
//   2: Fossils 4, Operations 5, regroup 3,
//      Salts 6, Sulphurs 7, Semi-metals 7,
//      Stones 4, Gems 5, regroup 2, whence 2,
//      Petrifications 5                          = 50
inline constexpr int kMinerologyInstanceTally = 61;
// Named facets: Parts, Phaenomena, Strata, Fossils, Operations, Salts,
// Sulphurs, Semi-metals, Stones, Gems, whence, Petrifications (12), plus
// the two anonymous regroupings after closed lists.
inline constexpr int kMinerologyFacetTally = 14;
// Every list above closes with "&c." except the Parts list (semicolon).
inline constexpr int kMinerologyOpenListTally = 13;

// Heathen entry (a Theology subdivision treated as its own fixture entry),
// with the transcriber-supplied "Rites" heading before Apotheosis.
inline const char* kHeathen = R"(@domain{HEATHEN} ; roman{Their} italic{Idolatry}, italic{Theogony}, &c.
roman{Their Gods ;} italic{Penates}, italic{Lares}, italic{Lemures}, &c.
italic{Panes}, italic{Sylvans}, italic{Nymphs}, italic{Tritons}, &c.
italic{Demi-god}, italic{Hero}, italic{Fortune}, italic{Destiny}, italic{Demon}, italic{Genius}, &c.
@interp{Rites} italic{Apotheosis}, italic{Sacrifice}, &c.
italic{Feast}, italic{Lustration}, &c.
roman{as} italic{Eleusinia}, italic{Saturnalia}, italic{Cerealia}, &c.
roman{Ministers thereof ;} italic{Rex}, italic{Pontifex}, italic{Flamen}, italic{Vestal}, italic{Corybantes}, &c.
roman{Games ;} italic{Olympic}, italic{Isthmean}, &c.
roman{Divination,} italic{Oracle}, italic{Pythian}, italic{Sibyl}, &c.
italic{Augur}, italic{Auspex}, &c.
roman{Temple,} italic{Fane}, italic{Pagod}, &c.
roman{Sects ; as} italic{Banians}, italic{Bramans}, italic{Sabaeans}, &c.
)";

// The Law fragment: one connective governing eight published forms.
inline const char* kLaw = R"(@domain{LAW} roman{publish'd in} italic{Act}, italic{Statute}, italic{Charter}, italic{Rescript}, italic{Constitution}, italic{Decretal}, italic{Senatus-consultum}, italic{Pragmatic Sanction}, &c.
)";

// Small companion entries for cross-domain fixtures.
inline const char* kChristianity = R"(@domain{CHRISTIANITY} roman{Rites, as} italic{Baptism}, italic{Eucharist}, italic{Feast}, italic{Procession}, &c.
roman{Orders, as} italic{Deacon}, italic{Priest}, italic{Bishop}, &c.
)";

inline const char* kTheology = R"(@domain{THEOLOGY} roman{, or the} italic{Science of Divine Things};
roman{Doctrines, as} italic{Trinity}, italic{Incarnation}, italic{Grace}, &c.
roman{Duties, as} italic{Prayer}, italic{Fasting}, italic{Almsgiving}.
)";

// Two concepts both named Feast (Heathen and Christianity) plus the
// recurring Rites facet make a ready-made disambiguation workload.
inline const char* kDecisions =
    "# label\taction\ttarget_or_qualifiers\trationale\n"
    "Feast\tmerge\tFeast\tsame ritual sense in both domains\n"
    "Rites\tsplit\t\trecurring facet; senses differ by domain\n";

// JEPD-clean outline whose leaves match the Law and Theology entries.
inline const char* kTaxonomyClean = R"(Knowledge
  Natural | divine
    Theology
  Artificial | civil
    Law
)";

// Leaves Minerology and Theology match; Optics stays unmatched.
inline const char* kTaxonomySample = R"(Knowledge
  Natural | sensible
    Minerology
    Optics
  Artificial | rational
    Theology
)";

// Duplicated leaf "Optics" under two branches: pairwise disjointness fails.
inline const char* kTaxonomyDuplicated = R"(Knowledge
  Natural
    Optics
    Minerology
  Artificial
    Optics
)";

}  // namespace fixtures

#endif
