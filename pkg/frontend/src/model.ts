/** Shared payload types mirroring the service's JSON schemas. */

export type ClassName = "unattacked" | "unchallenged" | "challenged";

export interface Choice {
  set: string[];
  class: ClassName;
  conflicts: string[][];
}

export interface SessionState {
  remaining: string[];
  accumulated: string[];
  choices: Choice[];
  terminal: boolean;
}

export interface FrameworkSnapshot {
  id: string;
  args: string[];
  attacks: [string, string][];
}

export interface SequenceStep {
  select: string[];
  class: ClassName;
}

export interface SequenceRecord {
  semantics: string;
  steps: SequenceStep[];
  extension: string[];
}

export interface ExtensionEntry {
  extension: string[];
  sequence: SequenceRecord;
}

export interface ExtensionsRecord {
  semantics: string;
  extensions: ExtensionEntry[];
}

export interface InitialSetEntry {
  set: string[];
  class: ClassName;
  conflicts: string[][];
  scc: number;
}

export const CLASS_COLOURS: Record<ClassName, string> = {
  unattacked: "#2e8b57",
  unchallenged: "#3a6ea5",
  challenged: "#e07b39",
};

export const SEMANTICS_OPTIONS = ["ad", "co", "gr", "st", "pr", "sa", "uc"] as const;
export type SemanticsCode = (typeof SEMANTICS_OPTIONS)[number];
