/** Session view-model: a pure mirror of the service's responses.
 *
 * No semantics are computed here.  The choice list, classes, terminal flag
 * and accumulated set shown to the user are exactly the parsed fields of
 * the last state payload; `choicesJson()` exposes what is rendered so tests
 * can compare it byte-for-byte against the recorded payload.  At most one
 * mutating request is in flight per session; controls stay disabled while
 * `pending` is true.
 */

import { ApiClient, ApiError } from "./api.js";
import type {
  ExtensionEntry,
  FrameworkSnapshot,
  SequenceRecord,
  SessionState,
} from "./model.js";

export class ExplorerViewModel {
  framework: FrameworkSnapshot | null = null;
  semantics = "pr";
  sessionId: string | null = null;
  state: SessionState | null = null;
  lastStateRaw = "";
  stepsTaken = 0;
  pending = false;
  notices: string[] = [];
  hovered: string[] | null = null;
  extensionsPanel: ExtensionEntry[] = [];
  replay: { steps: SequenceRecord["steps"]; cursor: number } | null = null;

  private listeners: Array<() => void> = [];

  constructor(private readonly api: ApiClient) {}

  onChange(listener: () => void): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) listener();
  }

  private notice(error: unknown): void {
    if (error instanceof ApiError) {
      this.notices.push(error.message);
    } else {
      this.notices.push(String(error));
    }
  }

  dismissNotice(index: number): void {
    this.notices.splice(index, 1);
    this.emit();
  }

  get canUndo(): boolean {
    return this.stepsTaken > 0 && !this.pending;
  }

  get canStep(): boolean {
    return this.sessionId !== null && !this.pending;
  }

  /** What the choice panel renders, serialised; used for byte-match tests. */
  choicesJson(): string {
    return JSON.stringify(this.state?.choices ?? []);
  }

  private async guarded(work: () => Promise<void>): Promise<boolean> {
    if (this.pending) return false;
    this.pending = true;
    this.emit();
    try {
      await work();
      return true;
    } catch (error) {
      this.notice(error);
      return false;
    } finally {
      this.pending = false;
      this.emit();
    }
  }

  loadFramework(format: string, content: string): Promise<boolean> {
    return this.guarded(async () => {
      this.framework = await this.api.uploadFramework(format, content);
      this.sessionId = null;
      this.state = null;
      this.lastStateRaw = "";
      this.stepsTaken = 0;
      this.extensionsPanel = [];
      this.replay = null;
    });
  }

  openSession(semantics?: string): Promise<boolean> {
    return this.guarded(async () => {
      if (!this.framework) throw new Error("load a framework first");
      if (semantics) this.semantics = semantics;
      const opened = await this.api.openSession(this.framework.id, this.semantics);
      this.sessionId = opened.sessionId;
      this.state = opened.state;
      this.lastStateRaw = opened.raw;
      this.stepsTaken = 0;
      this.replay = null;
    });
  }

  stepChoice(select: string[]): Promise<boolean> {
    return this.guarded(async () => {
      if (!this.sessionId) throw new Error("no open session");
      const response = await this.api.step(this.sessionId, select);
      this.state = response.state;
      this.lastStateRaw = response.raw;
      this.stepsTaken += 1;
    });
  }

  undo(): Promise<boolean> {
    return this.guarded(async () => {
      if (!this.sessionId) throw new Error("no open session");
      const response = await this.api.undo(this.sessionId);
      this.state = response.state;
      this.lastStateRaw = response.raw;
      this.stepsTaken = Math.max(0, this.stepsTaken - 1);
    });
  }

  loadExtensions(): Promise<boolean> {
    return this.guarded(async () => {
      if (!this.framework) throw new Error("load a framework first");
      const record = await this.api.extensions(this.framework.id, this.semantics);
      this.extensionsPanel = record.extensions;
    });
  }

  /** Start replaying a recorded sequence in a fresh session. */
  async startReplay(sequence: SequenceRecord): Promise<boolean> {
    const opened = await this.openSession();
    if (!opened) return false;
    this.replay = { steps: sequence.steps, cursor: 0 };
    this.emit();
    return true;
  }

  async replayNext(): Promise<boolean> {
    if (!this.replay || this.replay.cursor >= this.replay.steps.length) return false;
    const step = this.replay.steps[this.replay.cursor];
    const ok = await this.stepChoice(step.select);
    if (ok && this.replay) {
      this.replay.cursor += 1;
      this.emit();
    }
    return ok;
  }

  get replayDone(): boolean {
    return this.replay !== null && this.replay.cursor >= this.replay.steps.length;
  }

  setHover(labels: string[] | null): void {
    this.hovered = labels;
    this.emit();
  }
}
